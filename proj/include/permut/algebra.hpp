#ifndef PERMUT_ALGEBRA_HPP_
#define PERMUT_ALGEBRA_HPP_

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace permut {

struct OpSym {
  std::string name;
  int arity = 0;
};

// Ordered operation symbols with arities. Names are unique and nonempty;
// arity 0 (constants) is allowed.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<OpSym> symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  const OpSym& at(int i) const { return symbols_[i]; }
  const std::vector<OpSym>& symbols() const { return symbols_; }
  int index_of(const std::string& name) const;  // -1 if absent

 private:
  std::vector<OpSym> symbols_;
  std::unordered_map<std::string, int> index_;
};

// A finite algebra on universe {0, ..., size-1} with total operation tables.
// Tables are flat in lexicographic argument order, last argument fastest.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, int size, Signature sig,
                std::vector<std::vector<int>> tables);

  const std::string& name() const { return name_; }
  int size() const { return size_; }
  const Signature& sig() const { return sig_; }
  int num_ops() const { return sig_.size(); }

  const std::vector<int>& table(int op) const { return tables_[op]; }

  // Table lookup; args.size() must equal the symbol's arity.
  int apply(int op, std::span<const int> args) const;

 private:
  std::string name_;
  int size_;
  Signature sig_;
  std::vector<std::vector<int>> tables_;
};

// The m-th direct power, materialized as honest tables. Elements are base-k
// digit strings, first coordinate most significant. Guarded: size^m must
// stay small (tables are k^(m*arity) entries).
FiniteAlgebra direct_power(const FiniteAlgebra& alg, int exponent,
                           int max_universe = 4096);

// Coordinates of element e of direct_power(alg, m).
std::vector<int> power_coords(const FiniteAlgebra& base, int exponent, int e);

// --- algebra file format -----------------------------------------------
//
//   # comment
//   name group2
//   size 2
//   op + 2
//   0 1
//   1 0
//   op - 1
//   0 1
//   op 0 0
//   0
//
// After an "op SYMBOL ARITY" line exactly size^arity whitespace-separated
// entries follow (line breaks free). Out-of-range entries and wrong table
// lengths are rejected with line-precise messages.

FiniteAlgebra parse_algebra(const std::string& text,
                            const std::string& source = "<string>");
FiniteAlgebra load_algebra_file(const std::string& path);
std::string serialize_algebra(const FiniteAlgebra& alg);

}  // namespace permut

#endif  // PERMUT_ALGEBRA_HPP_
