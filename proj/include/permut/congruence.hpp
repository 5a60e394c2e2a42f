#ifndef PERMUT_CONGRUENCE_HPP_
#define PERMUT_CONGRUENCE_HPP_

#include <optional>
#include <vector>

#include "permut/binrel.hpp"

namespace permut {

class FiniteAlgebra;

// A congruence as a canonical block-representative array: rep(e) is the
// least element of e's block. The induced relation is an equivalence by
// representation; compatibility is established at construction.
class Congruence {
 public:
  // Validates compatibility with alg (throws std::invalid_argument).
  Congruence(const FiniteAlgebra& alg, std::vector<int> rep);

  static Congruence diagonal(int size);

  int size() const { return static_cast<int>(rep_.size()); }
  int rep(int e) const { return rep_[e]; }
  bool related(int a, int b) const { return rep_[a] == rep_[b]; }
  const std::vector<int>& rep_array() const { return rep_; }
  int num_blocks() const;
  std::vector<std::vector<int>> blocks() const;

  BinRel to_binrel() const;

  // Equivalence-lattice join (transitive closure of the union); for
  // congruences of one algebra this is again a congruence.
  Congruence join(const Congruence& other) const;

  bool operator==(const Congruence& o) const { return rep_ == o.rep_; }
  bool operator!=(const Congruence& o) const { return rep_ != o.rep_; }

 private:
  struct unchecked_t {};
  Congruence(unchecked_t, std::vector<int> rep);
  static std::vector<int> canonicalize(std::vector<int> rep);

  std::vector<int> rep_;

  friend Congruence principal_congruence(const FiniteAlgebra&, int, int);
  friend std::vector<Congruence> all_congruences(const FiniteAlgebra&,
                                                 std::size_t);
};

// Least congruence identifying a and b: the pair set is closed under unary
// polynomial images (one basic operation at a time) and equivalence closure
// to a fixpoint.
Congruence principal_congruence(const FiniteAlgebra& alg, int a, int b);

// All congruences: the closure of the principal congruences under join,
// plus the diagonal. Ordered by descending block count, then lexicographic
// representative array. Throws budget_error past max_count.
std::vector<Congruence> all_congruences(const FiniteAlgebra& alg,
                                        std::size_t max_count = 100'000);

// Least n >= 1 with alternating(R,S,n) = alternating(S,R,n), or nullopt if
// none up to max_n (max_n <= 0 picks the default 2*size^2). Equality is
// tested as the single inclusion (R,S)_n <= (S,R)_n; the converse is implied
// by symmetry of roles and asserted in debug builds.
std::optional<int> permutability_degree(const Congruence& r,
                                        const Congruence& s, int max_n = 0);

// True iff every pair of congruences of alg has permutability degree <= n.
bool algebra_permutability(const FiniteAlgebra& alg, int n);

}  // namespace permut

#endif  // PERMUT_CONGRUENCE_HPP_
