#include "permut/congruence.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

#include "permut/algebra.hpp"
#include "permut/errors.hpp"

namespace permut {

namespace {

// union-find over 0..k-1
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int k) : parent(k) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // true if a merge happened
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep least element as root
    parent[b] = a;
    return true;
  }

  std::vector<int> reps() {
    std::vector<int> out(parent.size());
    for (std::size_t e = 0; e < parent.size(); ++e) out[e] = find(static_cast<int>(e));
    return out;
  }
};

}  // namespace

std::vector<int> Congruence::canonicalize(std::vector<int> rep) {
  // rep[e] must point to the least member of e's block.
  UnionFind uf(static_cast<int>(rep.size()));
  for (std::size_t e = 0; e < rep.size(); ++e) {
    if (rep[e] < 0 || rep[e] >= static_cast<int>(rep.size())) {
      throw std::invalid_argument("representative out of range");
    }
    uf.unite(static_cast<int>(e), rep[e]);
  }
  return uf.reps();
}

Congruence::Congruence(unchecked_t, std::vector<int> rep)
    : rep_(std::move(rep)) {}

Congruence::Congruence(const FiniteAlgebra& alg, std::vector<int> rep)
    : rep_(canonicalize(std::move(rep))) {
  if (static_cast<int>(rep_.size()) != alg.size()) {
    throw std::invalid_argument("partition size mismatch");
  }
  if (!is_compatible(alg, to_binrel())) {
    throw std::invalid_argument("partition is not compatible with the algebra");
  }
}

Congruence Congruence::diagonal(int size) {
  std::vector<int> rep(size);
  std::iota(rep.begin(), rep.end(), 0);
  return Congruence(unchecked_t{}, std::move(rep));
}

int Congruence::num_blocks() const {
  int n = 0;
  for (std::size_t e = 0; e < rep_.size(); ++e) {
    if (rep_[e] == static_cast<int>(e)) ++n;
  }
  return n;
}

std::vector<std::vector<int>> Congruence::blocks() const {
  std::vector<std::vector<int>> out;
  std::vector<int> where(rep_.size(), -1);
  for (std::size_t e = 0; e < rep_.size(); ++e) {
    int r = rep_[e];
    if (where[r] < 0) {
      where[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[where[r]].push_back(static_cast<int>(e));
  }
  return out;
}

BinRel Congruence::to_binrel() const {
  BinRel r(static_cast<int>(rep_.size()));
  for (std::size_t a = 0; a < rep_.size(); ++a) {
    for (std::size_t b = 0; b < rep_.size(); ++b) {
      if (rep_[a] == rep_[b]) r.set(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return r;
}

Congruence Congruence::join(const Congruence& other) const {
  assert(rep_.size() == other.rep_.size());
  UnionFind uf(static_cast<int>(rep_.size()));
  for (std::size_t e = 0; e < rep_.size(); ++e) {
    uf.unite(static_cast<int>(e), rep_[e]);
    uf.unite(static_cast<int>(e), other.rep_[e]);
  }
  return Congruence(unchecked_t{}, uf.reps());
}

Congruence principal_congruence(const FiniteAlgebra& alg, int a, int b) {
  const int k = alg.size();
  if (a < 0 || a >= k || b < 0 || b >= k) {
    throw std::invalid_argument("element out of range");
  }
  UnionFind uf(k);
  std::vector<std::pair<int, int>> work;
  if (uf.unite(a, b)) work.emplace_back(a, b);

  // Close merged pairs under unary polynomial images of the basic
  // operations; transitivity comes from the union-find.
  std::vector<int> args;
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    for (int op = 0; op < alg.num_ops(); ++op) {
      const int arity = alg.sig().at(op).arity;
      if (arity == 0) continue;
      args.assign(arity, 0);
      for (int pos = 0; pos < arity; ++pos) {
        // all choices of the other arguments, odometer order
        while (true) {
          args[pos] = u;
          int fu = alg.apply(op, args);
          args[pos] = v;
          int fv = alg.apply(op, args);
          if (uf.unite(fu, fv)) work.emplace_back(fu, fv);
          int j = arity - 1;
          for (; j >= 0; --j) {
            if (j == pos) continue;
            if (++args[j] < k) break;
            args[j] = 0;
          }
          if (j < 0) break;
        }
        args.assign(arity, 0);
      }
    }
  }
  return Congruence(Congruence::unchecked_t{}, uf.reps());
}

std::vector<Congruence> all_congruences(const FiniteAlgebra& alg,
                                        std::size_t max_count) {
  const int k = alg.size();
  std::set<std::vector<int>> seen;
  std::vector<Congruence> found;

  auto push = [&](Congruence c) -> bool {
    if (!seen.insert(c.rep_array()).second) return false;
    if (found.size() >= max_count) {
      throw budget_error("congruence enumeration exceeds budget of " +
                         std::to_string(max_count));
    }
    found.push_back(std::move(c));
    return true;
  };

  push(Congruence::diagonal(k));
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) push(principal_congruence(alg, a, b));
  }

  // join closure; every congruence is a join of principal ones
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Congruence joined = found[i].join(found[j]);
      push(std::move(joined));
    }
  }

  std::sort(found.begin(), found.end(),
            [](const Congruence& x, const Congruence& y) {
              int bx = x.num_blocks(), by = y.num_blocks();
              if (bx != by) return bx > by;  // finest first
              return x.rep_array() < y.rep_array();
            });
  return found;
}

std::optional<int> permutability_degree(const Congruence& r,
                                        const Congruence& s, int max_n) {
  if (r.size() != s.size()) throw std::invalid_argument("size mismatch");
  if (max_n <= 0) max_n = 2 * r.size() * r.size();
  if (r == s) return 1;

  BinRel rb = r.to_binrel();
  BinRel sb = s.to_binrel();
  BinRel rs = rb;  // (R,S)_n
  BinRel sr = sb;  // (S,R)_n
  // at n = 1 equality is literally R == S, handled above; the inclusion
  // shortcut is only sound from n = 2 on
  for (int n = 2; n <= max_n; ++n) {
    // step n extends (R,S)_{n-1} by R when n is odd, S when n is even
    rs = compose(rs, n % 2 == 1 ? rb : sb);
    sr = compose(sr, n % 2 == 1 ? sb : rb);
    if (leq(rs, sr)) {
      assert(leq(sr, rs));  // converse implied by symmetry of roles
      return n;
    }
  }
  return std::nullopt;
}

bool algebra_permutability(const FiniteAlgebra& alg, int n) {
  std::vector<Congruence> cons = all_congruences(alg);
  for (std::size_t i = 0; i < cons.size(); ++i) {
    for (std::size_t j = i + 1; j < cons.size(); ++j) {
      std::optional<int> d = permutability_degree(cons[i], cons[j], n);
      if (!d || *d > n) return false;
    }
  }
  return true;
}

}  // namespace permut
