#ifndef PERMUT_RELCHECK_HPP_
#define PERMUT_RELCHECK_HPP_

#include <cstdint>
#include <vector>

#include "permut/binrel.hpp"

namespace permut {

class FiniteAlgebra;

// True iff alternating(E, E^op, n-1) is transitive. E must be reflexive
// (throws std::invalid_argument otherwise); compatibility is the caller's
// precondition.
bool check_reflexive_char(const FiniteAlgebra& alg, int n, const BinRel& e);

struct Lemma43Result {
  bool first_inclusion = false;   // (R,S)_{2n-2} <= (S,R)_{2n}
  bool second_inclusion = false;  // (S,R)_{2n}   <= (S,R)_{2n-2}
  bool ok() const { return first_inclusion && second_inclusion; }
};

// Direct matrix computation of the two inclusions above. The first holds for
// all equivalence relations; the second under the power-collapse hypothesis.
// R and S must be equivalence relations (throws otherwise).
Lemma43Result lemma43_check(const BinRel& r, const BinRel& s, int n);

// Every compatible relation containing the diagonal, enumerated by closing
// generator pair subsets in size-then-lexicographic order and deduplicating
// by matrix equality. Guarded: throws budget_error when 2^(size^2) subsets
// would exceed max_subsets.
std::vector<BinRel> enumerate_compatible_reflexive(
    const FiniteAlgebra& alg, std::uint64_t max_subsets = 1u << 20);

// Seeded sample of the same family: `count` random pair sets, closed and
// deduplicated, in draw order.
std::vector<BinRel> sample_compatible_reflexive(const FiniteAlgebra& alg,
                                                int count,
                                                std::uint64_t seed);

struct RtsEntry {
  BinRel rel;
  bool symmetric = false;
};

struct RtsReport {
  std::vector<RtsEntry> entries;  // all compatible reflexive transitive rels
  bool all_symmetric() const;
};

// Corollary-style check: enumerates the compatible reflexive transitive
// relations of alg and flags asymmetric ones.
RtsReport rts_symmetry_check(const FiniteAlgebra& alg,
                             std::uint64_t max_subsets = 1u << 20);

}  // namespace permut

#endif  // PERMUT_RELCHECK_HPP_
