#ifndef PERMUT_TESTS_HELPERS_HPP_
#define PERMUT_TESTS_HELPERS_HPP_

#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "permut/algebra.hpp"
#include "permut/binrel.hpp"
#include "permut/subpower.hpp"

namespace permut::testing {

inline std::string data_path(const std::string& name) {
  return std::string(PERMUT_DATA_DIR) + "/" + name;
}

// Corpus algebras built inline, independent of the file parser.

inline FiniteAlgebra group2() {
  return FiniteAlgebra("group2", 2,
                       Signature({{"+", 2}, {"-", 1}, {"0", 0}}),
                       {{0, 1, 1, 0}, {0, 1}, {0}});
}

inline FiniteAlgebra impl2() {
  return FiniteAlgebra("impl2", 2, Signature({{"->", 2}}), {{1, 1, 0, 1}});
}

inline FiniteAlgebra lattice2() {
  return FiniteAlgebra("lattice2", 2, Signature({{"meet", 2}, {"join", 2}}),
                       {{0, 0, 0, 1}, {0, 1, 1, 1}});
}

inline FiniteAlgebra empty2() {
  return FiniteAlgebra("empty2", 2, Signature{}, {});
}

inline FiniteAlgebra z3() {
  return FiniteAlgebra("z3", 3, Signature({{"+", 2}, {"-", 1}, {"0", 0}}),
                       {{0, 1, 2, 1, 2, 0, 2, 0, 1}, {0, 2, 1}, {0}});
}

inline FiniteAlgebra z4() {
  return FiniteAlgebra(
      "z4", 4, Signature({{"+", 2}, {"-", 1}, {"0", 0}}),
      {{0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2}, {0, 3, 2, 1}, {0}});
}

inline FiniteAlgebra z2z2() {
  return FiniteAlgebra(
      "z2z2", 4, Signature({{"+", 2}, {"-", 1}, {"0", 0}}),
      {{0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0}, {0, 1, 2, 3}, {0}});
}

// Induced algebra on a closed subuniverse, elements relabeled by position.
inline FiniteAlgebra subalgebra(const FiniteAlgebra& alg, std::string name,
                                const std::vector<int>& universe) {
  std::vector<int> position(alg.size(), -1);
  for (std::size_t i = 0; i < universe.size(); ++i) position[universe[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> tables;
  for (int op = 0; op < alg.num_ops(); ++op) {
    int arity = alg.sig().at(op).arity;
    std::size_t len = 1;
    for (int i = 0; i < arity; ++i) len *= universe.size();
    std::vector<int> table(len);
    std::vector<int> args(arity);
    for (std::size_t idx = 0; idx < len; ++idx) {
      std::size_t rest = idx;
      for (int j = arity - 1; j >= 0; --j) {
        args[j] = universe[rest % universe.size()];
        rest /= universe.size();
      }
      int value = alg.apply(op, args);
      if (position[value] < 0) throw std::invalid_argument("subuniverse not closed");
      table[idx] = position[value];
    }
    tables.push_back(std::move(table));
  }
  return FiniteAlgebra(std::move(name), static_cast<int>(universe.size()),
                       alg.sig(), std::move(tables));
}

// The three-element implication (Tarski) algebra {(0,1), (1,0), (1,1)} inside
// the square of impl2; the smallest member of the variety whose congruences
// need three alternations to permute.
inline FiniteAlgebra tarski3() {
  return subalgebra(direct_power(impl2(), 2), "tarski3", {1, 2, 3});
}

// --- independent oracles ---

// independent repeated-pass fixpoint closure over coordinate vectors
inline std::set<std::vector<uint8_t>> closure_oracle(
    const PowerAlgebra& ambient, std::vector<std::vector<uint8_t>> gens) {
  std::set<std::vector<uint8_t>> pool(gens.begin(), gens.end());
  const FiniteAlgebra& base = ambient.base();
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<uint8_t>> items(pool.begin(), pool.end());
    for (int op = 0; op < base.num_ops(); ++op) {
      int arity = base.sig().at(op).arity;
      if (arity > 0 && items.empty()) continue;
      std::vector<std::size_t> idx(arity, 0);
      while (true) {
        std::vector<std::vector<uint8_t>> args;
        for (int j = 0; j < arity; ++j) args.push_back(items[idx[j]]);
        if (pool.insert(ambient.apply(op, args)).second) grew = true;
        int j = arity - 1;
        for (; j >= 0; --j) {
          if (++idx[j] < items.size()) break;
          idx[j] = 0;
        }
        if (j < 0) break;
      }
    }
  }
  return pool;
}


// compose by the naive exists-b triple loop
inline BinRel compose_oracle(const BinRel& r, const BinRel& s) {
  BinRel out(r.size());
  for (int a = 0; a < r.size(); ++a) {
    for (int c = 0; c < r.size(); ++c) {
      for (int b = 0; b < r.size(); ++b) {
        if (r.at(a, b) && s.at(b, c)) {
          out.set(a, c);
          break;
        }
      }
    }
  }
  return out;
}

// alternating composite by explicit chain frontier expansion
inline BinRel alternating_oracle(const BinRel& r, const BinRel& s, int n) {
  BinRel out(r.size());
  for (int a = 0; a < r.size(); ++a) {
    std::set<int> frontier{a};
    for (int step = 1; step <= n; ++step) {
      const BinRel& rel = step % 2 == 1 ? r : s;
      std::set<int> next;
      for (int u : frontier) {
        for (int v = 0; v < r.size(); ++v) {
          if (rel.at(u, v)) next.insert(v);
        }
      }
      frontier = std::move(next);
    }
    for (int b : frontier) out.set(a, b);
  }
  return out;
}

inline BinRel random_relation(int size, std::mt19937& rng, double density = 0.3) {
  BinRel r(size);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      if (coin(rng) < density) r.set(a, b);
    }
  }
  return r;
}

// random partition of 0..size-1 as a least-representative array
inline std::vector<int> random_partition(int size, std::mt19937& rng) {
  std::vector<int> block_first;
  std::vector<int> rep(size);
  for (int e = 0; e < size; ++e) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(block_first.size()));
    int b = pick(rng);
    if (b == static_cast<int>(block_first.size())) block_first.push_back(e);
    rep[e] = block_first[b];
  }
  return rep;
}

// all partitions of 0..size-1 via restricted growth strings
inline std::vector<std::vector<int>> all_partitions(int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(size, 0);
  while (true) {
    // translate the growth string to a least-representative array
    std::vector<int> first_of_block(size, -1);
    std::vector<int> rep(size);
    for (int e = 0; e < size; ++e) {
      if (first_of_block[rgs[e]] < 0) first_of_block[rgs[e]] = e;
      rep[e] = first_of_block[rgs[e]];
    }
    out.push_back(rep);
    // next restricted growth string
    int e = size - 1;
    for (; e > 0; --e) {
      int max_prefix = 0;
      for (int j = 0; j < e; ++j) max_prefix = std::max(max_prefix, rgs[j]);
      if (rgs[e] <= max_prefix) {
        ++rgs[e];
        for (int j = e + 1; j < size; ++j) rgs[j] = 0;
        break;
      }
    }
    if (e == 0) break;
  }
  return out;
}

}  // namespace permut::testing

#endif  // PERMUT_TESTS_HELPERS_HPP_
