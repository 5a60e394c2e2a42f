#include "permut/relcheck.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "permut/algebra.hpp"
#include "permut/errors.hpp"

namespace permut {

bool check_reflexive_char(const FiniteAlgebra& alg, int n, const BinRel& e) {
  if (e.size() != alg.size()) throw std::invalid_argument("size mismatch");
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (!is_reflexive(e)) throw std::invalid_argument("E must be reflexive");
  return is_transitive(alternating(e, opposite(e), n - 1));
}

Lemma43Result lemma43_check(const BinRel& r, const BinRel& s, int n) {
  if (r.size() != s.size()) throw std::invalid_argument("size mismatch");
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (!is_equivalence(r) || !is_equivalence(s)) {
    throw std::invalid_argument("R and S must be equivalence relations");
  }
  Lemma43Result out;
  BinRel rs = alternating(r, s, 2 * n - 2);
  BinRel sr_long = alternating(s, r, 2 * n);
  BinRel sr_short = alternating(s, r, 2 * n - 2);
  out.first_inclusion = leq(rs, sr_long);
  out.second_inclusion = leq(sr_long, sr_short);
  return out;
}

namespace {

// Relations on k <= 8 elements as 64-bit pair masks, bit a*k+b.
struct MaskCloser {
  const FiniteAlgebra& alg;
  int k;
  std::uint64_t diagonal = 0;

  explicit MaskCloser(const FiniteAlgebra& a) : alg(a), k(a.size()) {
    if (k > 8) {
      throw budget_error("relation enumeration supports universes up to 8");
    }
    for (int e = 0; e < k; ++e) diagonal |= bit(e, e);
  }

  std::uint64_t bit(int a, int b) const {
    return std::uint64_t{1} << (a * k + b);
  }

  std::uint64_t close(std::uint64_t mask) const {
    mask |= diagonal;
    std::vector<int> lhs, rhs;
    bool grew = true;
    while (grew) {
      grew = false;
      // pairs currently present
      std::vector<std::pair<int, int>> prs;
      for (std::uint64_t m = mask; m;) {
        int idx = std::countr_zero(m);
        m &= m - 1;
        prs.emplace_back(idx / k, idx % k);
      }
      for (int op = 0; op < alg.num_ops(); ++op) {
        const int arity = alg.sig().at(op).arity;
        if (arity == 0) continue;  // (c,c) is already on the diagonal
        std::vector<std::size_t> idx(arity, 0);
        lhs.assign(arity, 0);
        rhs.assign(arity, 0);
        while (true) {
          for (int j = 0; j < arity; ++j) {
            lhs[j] = prs[idx[j]].first;
            rhs[j] = prs[idx[j]].second;
          }
          std::uint64_t b = bit(alg.apply(op, lhs), alg.apply(op, rhs));
          if (!(mask & b)) {
            mask |= b;
            grew = true;
          }
          int j = arity - 1;
          for (; j >= 0; --j) {
            if (++idx[j] < prs.size()) break;
            idx[j] = 0;
          }
          if (j < 0) break;
        }
      }
    }
    return mask;
  }

  BinRel to_rel(std::uint64_t mask) const {
    BinRel r(k);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        if (mask & bit(a, b)) r.set(a, b);
      }
    }
    return r;
  }
};

}  // namespace

std::vector<BinRel> enumerate_compatible_reflexive(const FiniteAlgebra& alg,
                                                   std::uint64_t max_subsets) {
  MaskCloser closer(alg);
  const int p = closer.k * closer.k;
  if (p >= 63 || (std::uint64_t{1} << p) > max_subsets) {
    throw budget_error("2^" + std::to_string(p) +
                       " generator subsets exceed the enumeration budget");
  }
  const std::uint64_t total = std::uint64_t{1} << p;

  // closure(s) extends closure(s minus its lowest bit), so one pass in
  // numeric order fills the table
  std::vector<std::uint64_t> closure_of(total);
  closure_of[0] = closer.close(0);
  for (std::uint64_t s = 1; s < total; ++s) {
    std::uint64_t low = s & (~s + 1);
    std::uint64_t prev = closure_of[s & (s - 1)];
    closure_of[s] = (prev & low) ? prev : closer.close(prev | low);
  }

  // report in generator-subset size-then-lexicographic order, deduplicated
  std::vector<std::uint64_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [](std::uint64_t a, std::uint64_t b) {
                     return std::popcount(a) < std::popcount(b);
                   });
  std::set<std::uint64_t> seen;
  std::vector<BinRel> out;
  for (std::uint64_t s : order) {
    if (seen.insert(closure_of[s]).second) {
      out.push_back(closer.to_rel(closure_of[s]));
    }
  }
  return out;
}

std::vector<BinRel> sample_compatible_reflexive(const FiniteAlgebra& alg,
                                                int count, std::uint64_t seed) {
  MaskCloser closer(alg);
  const int p = closer.k * closer.k;
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> seen;
  std::vector<BinRel> out;
  for (int i = 0; i < count; ++i) {
    std::uint64_t mask = rng() & ((p >= 64) ? ~std::uint64_t{0}
                                            : ((std::uint64_t{1} << p) - 1));
    std::uint64_t closed = closer.close(mask);
    if (seen.insert(closed).second) out.push_back(closer.to_rel(closed));
  }
  return out;
}

bool RtsReport::all_symmetric() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const RtsEntry& e) { return e.symmetric; });
}

RtsReport rts_symmetry_check(const FiniteAlgebra& alg,
                             std::uint64_t max_subsets) {
  RtsReport report;
  for (BinRel& rel : enumerate_compatible_reflexive(alg, max_subsets)) {
    if (!is_transitive(rel)) continue;
    bool sym = is_symmetric(rel);
    report.entries.push_back({std::move(rel), sym});
  }
  return report;
}

}  // namespace permut
