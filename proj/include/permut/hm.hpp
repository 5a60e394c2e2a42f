#ifndef PERMUT_HM_HPP_
#define PERMUT_HM_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "permut/algebra.hpp"
#include "permut/subpower.hpp"
#include "permut/term.hpp"

namespace permut {

// A chain of n-1 ternary terms w1..w_{n-1} over variables (x, y, z) with
//   w1(x,y,y) = x,  w_i(x,x,y) = w_{i+1}(x,y,y),  w_{n-1}(x,x,y) = y
// holding on the owning algebra for all assignments.
struct HMWitness {
  int n = 0;
  std::vector<Term> terms;
};

// n+1 terms v0..vn over variables (x0, ..., xn) with v0 = x0, vn = xn and
// the doubled-argument agreement identities in between.
struct NaryWitness {
  int n = 0;
  std::vector<Term> terms;
};

// --- pattern subpower and graph -------------------------------------------

// Index set D = {(a,b,b)} u {(a,a,b)}, triples (a,a,a) stored once. The
// "left face" of an element f of alg^D is the binary function (a,b) ->
// f(a,b,b), the "right face" (a,b) -> f(a,a,b).
class PatternIndex {
 public:
  explicit PatternIndex(int k);

  int k() const { return k_; }
  int dim() const { return static_cast<int>(triples_.size()); }
  const std::vector<std::array<int, 3>>& triples() const { return triples_; }
  int left_coord(int a, int b) const { return left_[a * k_ + b]; }
  int right_coord(int a, int b) const { return right_[a * k_ + b]; }

  std::vector<uint8_t> projection(int which) const;  // generator coords

 private:
  int k_;
  std::vector<std::array<int, 3>> triples_;
  std::vector<int> left_, right_;  // (a,b) -> coordinate index
};

// Closure of the three projections restricted to D, with provenance.
struct PatternSubpower {
  PatternIndex index;
  SubpowerClosure closure;
};

PatternSubpower build_pattern_subpower(const FiniteAlgebra& alg,
                                       std::size_t budget = kDefaultClosureBudget);

// Nodes are the face functions A^2 -> A of closure elements; each element f
// contributes the edge left_face(f) -> right_face(f) labeled by f. A term
// chain for n is exactly a walk of n-1 edges from the first projection's
// face to the second projection's face.
class PatternGraph {
 public:
  explicit PatternGraph(const PatternSubpower& sub);

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int pi1() const { return pi1_; }
  int pi2() const { return pi2_; }

  struct Edge {
    int from, to;
    int elem;  // closure element carrying the provenance term
  };
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& out_edges(int node) const { return out_[node]; }

  // BFS distance pi1 -> pi2 (first-discovered tie-break); nullopt when
  // unreachable.
  std::optional<int> shortest_distance() const;

  // Element indices of a walk of exactly len edges pi1 -> pi2, padded at
  // pi2 with the third projection's self-loop; nullopt when impossible.
  std::optional<std::vector<int>> walk(int len) const;

 private:
  std::vector<std::vector<uint8_t>> nodes_;  // face tables, k*k entries
  std::vector<std::vector<int>> out_;        // node -> edge ids, insertion order
  std::vector<Edge> edges_;
  int pi1_ = -1, pi2_ = -1;
};

// --- search and verification -----------------------------------------------

struct IdentityResult {
  std::string identity;               // e.g. "w1(x,y,y) = x"
  bool passed = false;
  Assignment failure;                 // first failing assignment, if any
  std::string failure_text;
};

struct VerifyReport {
  bool ok = false;
  std::vector<IdentityResult> identities;
};

// Exhaustive check of the n Hagemann-Mitschke identities over all k^2
// relevant assignments. candidate must hold n-1 ternary terms.
VerifyReport verify_hm(const FiniteAlgebra& alg,
                       std::span<const Term> candidate, int n);

// Exhaustive check of v0 = x0, vn = xn and the doubled-pattern agreement
// identities, each over the free variables remaining in its pattern.
VerifyReport verify_nary(const FiniteAlgebra& alg,
                         std::span<const Term> candidate, int n);

// Searches the pattern graph for a walk of exactly n-1 edges and returns the
// edge provenances as a witness, re-verified exhaustively before emission.
std::optional<HMWitness> hm_search(const FiniteAlgebra& alg, int n,
                                   std::size_t budget = kDefaultClosureBudget);

// Least n admitting a witness. nullopt certifies that NO n admits
// Hagemann-Mitschke terms over the variety generated by alg (the pattern
// graph is finite and fully built, and every candidate chain induces a walk
// in it).
std::optional<int> min_degree(const FiniteAlgebra& alg,
                              std::size_t budget = kDefaultClosureBudget);

// Remark-style conversions, both directions re-verified on alg.
NaryWitness ternary_to_nary(const FiniteAlgebra& alg, const HMWitness& w);
HMWitness nary_to_ternary(const FiniteAlgebra& alg, const NaryWitness& v);

// --- witness files ----------------------------------------------------------
//
//   algebra group2
//   kind ternary        (or: nary)
//   n 2
//   w1 = +(x, +(y, z))
//
// Terms use the shared prefix notation; ternary witnesses declare variables
// x, y, z and n-ary ones x0..xn. Both forms round-trip through parse_term.

struct WitnessDoc {
  std::string algebra_name;
  bool nary = false;
  int n = 0;
  std::vector<Term> terms;
};

WitnessDoc parse_witness(const FiniteAlgebra& alg, const std::string& text,
                         const std::string& source = "<string>");
WitnessDoc load_witness_file(const FiniteAlgebra& alg, const std::string& path);
std::string serialize_witness(const WitnessDoc& doc);

WitnessDoc to_doc(const std::string& algebra_name, const HMWitness& w);
WitnessDoc to_doc(const std::string& algebra_name, const NaryWitness& v);

}  // namespace permut

#endif  // PERMUT_HM_HPP_
