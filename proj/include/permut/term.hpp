#ifndef PERMUT_TERM_HPP_
#define PERMUT_TERM_HPP_

#include <memory>
#include <string>
#include <vector>

namespace permut {

class FiniteAlgebra;

// An immutable term tree over a signature and a declared variable list.
// Nodes are shared (terms expanded from a closure DAG reuse subterms), so
// structurally huge terms stay small in memory and evaluation memoizes on
// node identity.
class Term {
 public:
  Term() = default;

  static Term var(int index);
  static Term app(std::string symbol, std::vector<Term> args);

  bool empty() const { return node_ == nullptr; }
  bool is_var() const;
  int var_index() const;                  // variable nodes only
  const std::string& symbol() const;      // application nodes only
  const std::vector<Term>& args() const;  // application nodes only

  // Identity of the underlying node; valid as a memoization key.
  const void* id() const { return node_.get(); }

  bool operator==(const Term& other) const;  // structural
  bool operator!=(const Term& other) const { return !(*this == other); }

  // Largest variable index occurring, or -1 for variable-free terms.
  int max_var() const;

  // Prefix notation with the given variable names, e.g. "+(x, +(y, z))".
  // Nullary symbols print bare.
  std::string str(const std::vector<std::string>& var_names) const;

  // Replaces variable i by replacement[i]; indices past the end are kept.
  Term substitute(const std::vector<Term>& replacement) const;

 private:
  struct Node {
    int var = -1;  // >= 0: variable index; otherwise an application
    std::string symbol;
    std::vector<Term> args;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Total map from variable indices to universe elements; -1 = unassigned.
using Assignment = std::vector<int>;

// Bottom-up evaluation of t over alg. Throws eval_error (distinct kinds) on
// unknown symbols, arity mismatches and unassigned variables.
int eval_term(const FiniteAlgebra& alg, const Term& t, const Assignment& a);

// Parses prefix notation: "sym(arg, ...)", a declared variable name, or a
// bare nullary symbol of alg's signature. Inverse of Term::str.
Term parse_term(const FiniteAlgebra& alg, const std::string& text,
                const std::vector<std::string>& var_names);

// Variable name conventions shared by witness files and reports.
std::vector<std::string> ternary_var_names();       // x, y, z
std::vector<std::string> nary_var_names(int n);     // x0, ..., xn

}  // namespace permut

#endif  // PERMUT_TERM_HPP_
