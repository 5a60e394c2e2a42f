#ifndef PERMUT_SUBPOWER_HPP_
#define PERMUT_SUBPOWER_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "permut/algebra.hpp"
#include "permut/term.hpp"

namespace permut {

// The coordinatewise power of a base algebra over an abstract index set of
// size dim. Elements are coordinate maps (never materialized as tables);
// operations are computed on demand.
class PowerAlgebra {
 public:
  PowerAlgebra(const FiniteAlgebra& base, int dim);

  const FiniteAlgebra& base() const { return *base_; }
  int dim() const { return dim_; }

  // Coordinatewise application of operation op to the given elements.
  std::vector<uint8_t> apply(int op,
                             std::span<const std::vector<uint8_t>> args) const;

 private:
  const FiniteAlgebra* base_;
  int dim_;
};

constexpr std::size_t kDefaultClosureBudget = 1'000'000;

// The subalgebra of a coordinatewise power generated by a list of elements,
// together with term provenance. Elements are stored in discovery order
// (generators first); provenance is a shared subterm graph: each generated
// element remembers its operation and argument elements, and full term trees
// are materialized only on demand.
class SubpowerClosure {
 public:
  struct Provenance {
    int op = -1;             // -1: generator
    std::vector<int> args;   // element indices, or {generator index}
  };

  // Worklist closure in first-discovered order, argument tuples in
  // lexicographic order. Throws budget_error when the element count would
  // exceed budget. Duplicate generators keep their first occurrence.
  static SubpowerClosure generate(const PowerAlgebra& ambient,
                                  std::span<const std::vector<uint8_t>> generators,
                                  std::size_t budget = kDefaultClosureBudget);

  const PowerAlgebra& ambient() const { return ambient_; }
  std::size_t size() const { return coords_.size(); }
  int num_generators() const { return num_generators_; }

  const std::vector<uint8_t>& coords(std::size_t i) const { return coords_[i]; }
  const Provenance& provenance(std::size_t i) const { return prov_[i]; }

  // Index of the element with these coordinates, or -1.
  int find(const std::vector<uint8_t>& coords) const;

  // Provenance term of element i over one variable per generator. Safe for
  // concurrent callers; expanded trees share subterms across elements.
  Term term_of(std::size_t i) const;

 private:
  explicit SubpowerClosure(const PowerAlgebra& ambient);

  struct TermCache {
    std::mutex mu;
    std::vector<Term> terms;
  };

  PowerAlgebra ambient_;
  int num_generators_ = 0;
  std::vector<std::vector<uint8_t>> coords_;
  std::vector<Provenance> prov_;
  std::unordered_map<std::string, int> index_;
  std::unique_ptr<TermCache> term_cache_ = std::make_unique<TermCache>();
};

}  // namespace permut

#endif  // PERMUT_SUBPOWER_HPP_
