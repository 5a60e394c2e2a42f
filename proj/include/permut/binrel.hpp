#ifndef PERMUT_BINREL_HPP_
#define PERMUT_BINREL_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace permut {

class FiniteAlgebra;

// A binary relation on {0, ..., size-1} as a dense boolean matrix, rows
// stored as bit vectors. Composition is a word-parallel OR loop.
class BinRel {
 public:
  explicit BinRel(int size);

  static BinRel diagonal(int size);
  static BinRel full(int size);
  static BinRel from_pairs(int size,
                           std::span<const std::pair<int, int>> pairs);

  int size() const { return size_; }
  bool at(int a, int b) const {
    return (row(a)[b >> 6] >> (b & 63)) & 1u;
  }
  void set(int a, int b) { row(a)[b >> 6] |= uint64_t{1} << (b & 63); }

  bool operator==(const BinRel& other) const;
  bool operator!=(const BinRel& other) const { return !(*this == other); }

  std::vector<std::pair<int, int>> pairs() const;  // row-major order
  int count() const;

  const uint64_t* row(int a) const { return bits_.data() + a * words_; }
  uint64_t* row(int a) { return bits_.data() + a * words_; }
  int words() const { return words_; }

 private:
  int size_;
  int words_;
  std::vector<uint64_t> bits_;
};

BinRel opposite(const BinRel& r);

// (a,c) in the result iff a R b and b S c for some b. Classical composite
// notation writes this SR (second-applied first); the argument order here is
// (first step, second step).
BinRel compose(const BinRel& r, const BinRel& s);

// n alternating steps whose first step is R: a R x1 S x2 R x3 ... b.
BinRel alternating(const BinRel& r, const BinRel& s, int n);

// R^n = alternating(R, R, n).
BinRel rel_power(const BinRel& r, int n);

bool leq(const BinRel& r, const BinRel& s);  // subset

bool is_reflexive(const BinRel& r);
bool is_symmetric(const BinRel& r);
// Default is the inclusion form RR <= R; strict tests the literal RR == R.
bool is_transitive(const BinRel& r, bool strict = false);
bool is_equivalence(const BinRel& r);

// True iff r, as a subset of the square algebra, is closed under all
// operations applied coordinatewise.
bool is_compatible(const FiniteAlgebra& alg, const BinRel& r);

// Least compatible relation containing the diagonal and the given pairs;
// computed by closing generators in the square via subalgebra_closure.
BinRel compatible_reflexive_closure(const FiniteAlgebra& alg,
                                    std::span<const std::pair<int, int>> pairs);

// --- text forms -----------------------------------------------------------

// Pair-list literal: "a,b;c,d" (empty string = empty relation).
BinRel parse_relation(const std::string& text, int size);
std::string format_relation(const BinRel& r);  // inverse of parse_relation

}  // namespace permut

#endif  // PERMUT_BINREL_HPP_
