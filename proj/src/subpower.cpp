#include "permut/subpower.hpp"

#include <cassert>
#include <stdexcept>

#include "permut/errors.hpp"

namespace permut {

PowerAlgebra::PowerAlgebra(const FiniteAlgebra& base, int dim)
    : base_(&base), dim_(dim) {
  if (dim < 1) throw std::invalid_argument("power index set must be nonempty");
}

std::vector<uint8_t> PowerAlgebra::apply(
    int op, std::span<const std::vector<uint8_t>> args) const {
  int arity = base_->sig().at(op).arity;
  assert(static_cast<int>(args.size()) == arity);
  std::vector<uint8_t> out(dim_);
  const std::vector<int>& table = base_->table(op);
  const int k = base_->size();
  for (int c = 0; c < dim_; ++c) {
    std::size_t idx = 0;
    for (int j = 0; j < arity; ++j) {
      assert(args[j].size() == static_cast<std::size_t>(dim_));
      idx = idx * k + args[j][c];
    }
    out[c] = static_cast<uint8_t>(table[idx]);
  }
  return out;
}

SubpowerClosure::SubpowerClosure(const PowerAlgebra& ambient)
    : ambient_(ambient) {}

int SubpowerClosure::find(const std::vector<uint8_t>& coords) const {
  std::string key(coords.begin(), coords.end());
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

SubpowerClosure SubpowerClosure::generate(
    const PowerAlgebra& ambient, std::span<const std::vector<uint8_t>> generators,
    std::size_t budget) {
  SubpowerClosure c(ambient);
  const FiniteAlgebra& base = ambient.base();

  auto add = [&](std::vector<uint8_t> coords, Provenance prov) -> bool {
    std::string key(coords.begin(), coords.end());
    auto [it, inserted] = c.index_.emplace(key, static_cast<int>(c.coords_.size()));
    if (!inserted) return false;
    if (c.coords_.size() >= budget) {
      throw budget_error("subpower closure exceeds budget of " +
                         std::to_string(budget) + " elements");
    }
    c.coords_.push_back(std::move(coords));
    c.prov_.push_back(std::move(prov));
    return true;
  };

  for (std::size_t g = 0; g < generators.size(); ++g) {
    assert(generators[g].size() == static_cast<std::size_t>(ambient.dim()));
    add(generators[g], Provenance{-1, {static_cast<int>(g)}});
  }
  c.num_generators_ = static_cast<int>(generators.size());

  // Constants join the pool once, before the worklist runs.
  for (int op = 0; op < base.num_ops(); ++op) {
    if (base.sig().at(op).arity == 0) {
      add(ambient.apply(op, {}), Provenance{op, {}});
    }
  }

  // FIFO worklist: element i is combined, per operation, with every tuple of
  // elements whose maximum index is exactly i, in lexicographic order. Each
  // tuple over the final set is applied exactly once across the whole run.
  std::vector<std::vector<uint8_t>> arg_coords;
  std::vector<int> tuple;
  for (std::size_t i = 0; i < c.coords_.size(); ++i) {
    const int limit = static_cast<int>(i);
    for (int op = 0; op < base.num_ops(); ++op) {
      const int arity = base.sig().at(op).arity;
      if (arity == 0) continue;
      tuple.assign(arity, 0);
      auto apply_tuple = [&]() {
        arg_coords.clear();
        for (int j = 0; j < arity; ++j) arg_coords.push_back(c.coords_[tuple[j]]);
        add(ambient.apply(op, arg_coords), Provenance{op, tuple});
      };
      // lexicographic enumeration of [0..i]^arity restricted to max == i
      auto descend = [&](auto&& self, int pos, bool has_limit) -> void {
        if (pos == arity) {
          apply_tuple();
          return;
        }
        int first = (!has_limit && pos == arity - 1) ? limit : 0;
        for (int v = first; v <= limit; ++v) {
          tuple[pos] = v;
          self(self, pos + 1, has_limit || v == limit);
        }
      };
      descend(descend, 0, false);
    }
  }
  return c;
}

Term SubpowerClosure::term_of(std::size_t i) const {
  std::lock_guard<std::mutex> lock(term_cache_->mu);
  std::vector<Term>& cache = term_cache_->terms;
  if (cache.size() < coords_.size()) cache.resize(coords_.size());
  if (!cache[i].empty()) return cache[i];

  // Iterative DAG expansion so deep provenance cannot overflow the stack.
  std::vector<std::size_t> stack{i};
  while (!stack.empty()) {
    std::size_t e = stack.back();
    if (!cache[e].empty()) {
      stack.pop_back();
      continue;
    }
    const Provenance& p = prov_[e];
    if (p.op < 0) {
      cache[e] = Term::var(p.args[0]);
      stack.pop_back();
      continue;
    }
    bool ready = true;
    for (int a : p.args) {
      if (cache[a].empty()) {
        stack.push_back(a);
        ready = false;
      }
    }
    if (!ready) continue;
    std::vector<Term> args;
    args.reserve(p.args.size());
    for (int a : p.args) args.push_back(cache[a]);
    cache[e] = Term::app(ambient_.base().sig().at(p.op).name, std::move(args));
    stack.pop_back();
  }
  return cache[i];
}

}  // namespace permut
