#ifndef PERMUT_CHAINS_HPP_
#define PERMUT_CHAINS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "permut/binrel.hpp"
#include "permut/hm.hpp"

namespace permut {

class FiniteAlgebra;

// An element sequence e0..em with alternating relation labels; consecutive
// pairs belong to their labeled relation (checked on construction by the
// operations below). Printed as "e0 -R-> e1 -S-> e2".
struct Chain {
  std::vector<int> elements;
  std::vector<std::string> labels;  // one per step

  int steps() const { return static_cast<int>(labels.size()); }
  std::string str() const;
};

// Builds the label vector for m steps alternating first/second.
Chain make_chain(std::vector<int> elements, const std::string& first_label,
                 const std::string& second_label);

// Validates every step of c against its labeled relation (label -> rel).
// Returns the first offending step index, or nullopt when valid.
std::optional<int> chain_defect(const Chain& c, const BinRel& first_rel,
                                const BinRel& second_rel);

// Chain transformation behind the permutability characterization: an
// (R,S)_n chain (first step R) becomes an (S,R)_n chain with the same endpoints. New interior elements
// are w_i applied to consecutive triples of the old chain. R, S must be
// compatible equivalence relations and c valid; every output step is
// re-checked before returning and a failure (an implementation bug) throws
// std::logic_error naming the offending step.
Chain permute_chain(const FiniteAlgebra& alg, const HMWitness& w,
                    const BinRel& r, const BinRel& s, const Chain& c);

// From (y,x) in R (R reflexive, compatible) builds the chain
//   x = w1(x,y,y) R w1(x,x,y) = w2(x,y,y) R ... R w_{n-1}(x,x,y) = y,
// certifying (x,y) in R^{n-1}, i.e. R^op <= R^{n-1}. Self-verified.
Chain symmetrize_chain(const FiniteAlgebra& alg, const HMWitness& w,
                       const BinRel& r, int x, int y);

// Shortens a chain of m >= n R-steps to m-1 steps with the same endpoints
// (the first n steps collapse to n-1), certifying R^n <= R^{n-1} when
// iterated. R reflexive and compatible. Self-verified.
Chain shorten_chain(const FiniteAlgebra& alg, const HMWitness& w,
                    const BinRel& r, const Chain& c);

// --- equivalence report ------------------------------------------------------

struct Hm3RelationResult {
  BinRel rel;
  bool op_inclusion = false;     // R^op <= R^{n-1}
  bool power_inclusion = false;  // R^n  <= R^{n-1}
  bool chains_ok = false;        // constructive validation (when applicable)
  int symmetrize_checked = 0;
  int shorten_checked = 0;
  bool pass(bool constructive) const {
    return op_inclusion && power_inclusion && (!constructive || chains_ok);
  }
};

struct Hm3Report {
  int n = 0;
  std::optional<HMWitness> witness;  // empty: constructive checks inapplicable
  std::vector<Hm3RelationResult> relations;
  bool all_pass() const;
};

// For each compatible reflexive relation (exhaustive when samples <= 0,
// otherwise a seeded sample of that size), checks R^op <= R^{n-1} and
// R^n <= R^{n-1} by matrix computation and, when a witness for n exists,
// validates both constructively via symmetrize_chain / shorten_chain on
// every witnessing pair.
Hm3Report hm3_equivalence_report(const FiniteAlgebra& alg, int n,
                                 int samples = 0,
                                 std::uint64_t seed = 0x5eed);

}  // namespace permut

#endif  // PERMUT_CHAINS_HPP_
