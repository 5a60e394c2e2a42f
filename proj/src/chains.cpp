#include "permut/chains.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "permut/algebra.hpp"
#include "permut/errors.hpp"
#include "permut/relcheck.hpp"

namespace permut {

std::string Chain::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out << " -" << labels[i - 1] << "-> ";
    out << elements[i];
  }
  return out.str();
}

Chain make_chain(std::vector<int> elements, const std::string& first_label,
                 const std::string& second_label) {
  if (elements.empty()) throw std::invalid_argument("chain needs an element");
  Chain c;
  c.labels.reserve(elements.size() - 1);
  for (std::size_t i = 1; i < elements.size(); ++i) {
    c.labels.push_back(i % 2 == 1 ? first_label : second_label);
  }
  c.elements = std::move(elements);
  return c;
}

std::optional<int> chain_defect(const Chain& c, const BinRel& first_rel,
                                const BinRel& second_rel) {
  for (int i = 0; i < c.steps(); ++i) {
    const BinRel& rel = (i % 2 == 0) ? first_rel : second_rel;
    if (!rel.at(c.elements[i], c.elements[i + 1])) return i;
  }
  return std::nullopt;
}

namespace {

void require_witness(const FiniteAlgebra& alg, const HMWitness& w) {
  if (!verify_hm(alg, w.terms, w.n).ok) {
    throw std::invalid_argument("witness does not satisfy the term identities");
  }
}

int eval3(const FiniteAlgebra& alg, const Term& t, int a, int b, int c) {
  return eval_term(alg, t, {a, b, c});
}

[[noreturn]] void bad_step(const char* what, const Chain& c, int step) {
  throw std::logic_error(std::string(what) + ": output chain fails at step " +
                         std::to_string(step) + " of " + c.str());
}

}  // namespace

Chain permute_chain(const FiniteAlgebra& alg, const HMWitness& w,
                    const BinRel& r, const BinRel& s, const Chain& c) {
  const int n = w.n;
  if (r.size() != alg.size() || s.size() != alg.size()) {
    throw std::invalid_argument("relation size mismatch");
  }
  if (!is_equivalence(r) || !is_equivalence(s)) {
    throw std::invalid_argument("R and S must be equivalence relations");
  }
  if (!is_compatible(alg, r) || !is_compatible(alg, s)) {
    throw std::invalid_argument("R and S must be compatible with the algebra");
  }
  require_witness(alg, w);
  if (c.steps() != n) {
    throw std::invalid_argument("chain must have exactly n = " +
                                std::to_string(n) + " steps");
  }
  if (chain_defect(c, r, s)) {
    throw std::invalid_argument("input chain is not an (R,S)_n chain");
  }

  // New interior elements are the w_i applied to consecutive triples of the
  // old chain; the first and last steps land in S via w1(x,y,y)=x and
  // w_{n-1}(x,x,y)=y, the middle ones glue through w_i(x,x,y)=w_{i+1}(x,y,y).
  const std::vector<int>& x = c.elements;  // x[0]=a .. x[n]=b
  std::vector<int> out;
  out.reserve(n + 1);
  out.push_back(x[0]);
  for (int i = 1; i <= n - 1; ++i) {
    out.push_back(eval3(alg, w.terms[i - 1], x[i - 1], x[i], x[i + 1]));
  }
  out.push_back(x[n]);

  Chain result = make_chain(std::move(out), "S", "R");
  if (auto defect = chain_defect(result, s, r)) {
    bad_step("permute_chain", result, *defect);
  }
  assert(result.elements.front() == c.elements.front());
  assert(result.elements.back() == c.elements.back());
  return result;
}

Chain symmetrize_chain(const FiniteAlgebra& alg, const HMWitness& w,
                       const BinRel& r, int x, int y) {
  const int n = w.n;
  if (r.size() != alg.size()) throw std::invalid_argument("relation size mismatch");
  if (x < 0 || x >= alg.size() || y < 0 || y >= alg.size()) {
    throw std::invalid_argument("element out of range");
  }
  if (!is_reflexive(r)) throw std::invalid_argument("R must be reflexive");
  if (!is_compatible(alg, r)) {
    throw std::invalid_argument("R must be compatible with the algebra");
  }
  if (!r.at(y, x)) throw std::invalid_argument("(y,x) must belong to R");
  require_witness(alg, w);

  // x = w1(x,y,y) R w1(x,x,y) = w2(x,y,y) R ... R w_{n-1}(x,x,y) = y;
  // each step is w_i applied to the R-pairs (x,x), (y,x), (y,y).
  std::vector<int> elems;
  elems.reserve(n);
  elems.push_back(x);
  for (int i = 1; i <= n - 1; ++i) {
    elems.push_back(eval3(alg, w.terms[i - 1], x, x, y));
  }
  if (elems.back() != y) {
    throw std::logic_error("symmetrize_chain: w_{n-1}(x,x,y) != y");
  }

  Chain result = make_chain(std::move(elems), "R", "R");
  if (auto defect = chain_defect(result, r, r)) {
    bad_step("symmetrize_chain", result, *defect);
  }
  return result;
}

Chain shorten_chain(const FiniteAlgebra& alg, const HMWitness& w,
                    const BinRel& r, const Chain& c) {
  const int n = w.n;
  const int m = c.steps();
  if (r.size() != alg.size()) throw std::invalid_argument("relation size mismatch");
  if (!is_reflexive(r)) throw std::invalid_argument("R must be reflexive");
  if (!is_compatible(alg, r)) {
    throw std::invalid_argument("R must be compatible with the algebra");
  }
  require_witness(alg, w);
  if (m < n) {
    throw std::invalid_argument("chain must have at least n = " +
                                std::to_string(n) + " steps");
  }
  if (chain_defect(c, r, r)) {
    throw std::invalid_argument("input chain is not an R-chain");
  }

  // The first n steps collapse to n-1: the new interior elements are
  // z_i = w_i(x_i, x_i, x_{i+1}); z_0 = w_1(x_0, x_1, x_1) = x_0 and
  // z_{n-1} = w_{n-1}(x_{n-1}, x_{n-1}, x_n) = x_n, and each step
  // (z_{i-1}, z_i) is w_i applied to R-pairs via the glue identities.
  const std::vector<int>& x = c.elements;
  std::vector<int> elems;
  elems.reserve(m);
  elems.push_back(x[0]);
  for (int i = 1; i <= n - 1; ++i) {
    elems.push_back(eval3(alg, w.terms[i - 1], x[i], x[i], x[i + 1]));
  }
  if (elems.back() != x[n]) {
    throw std::logic_error("shorten_chain: w_{n-1}(x,x,y) != y");
  }
  for (int i = n + 1; i <= m; ++i) elems.push_back(x[i]);  // untouched tail

  Chain result = make_chain(std::move(elems), "R", "R");
  if (auto defect = chain_defect(result, r, r)) {
    bad_step("shorten_chain", result, *defect);
  }
  assert(result.elements.front() == c.elements.front());
  assert(result.elements.back() == c.elements.back());
  return result;
}

// --- equivalence report ---------------------------------------------------------

namespace {

// Least-first DFS for an n-step R-chain from a to b; exists whenever
// (a,b) is in R^n.
bool find_chain_rec(const BinRel& r, int cur, int b, int steps_left,
                    std::vector<int>& elems) {
  if (steps_left == 0) return cur == b;
  for (int next = 0; next < r.size(); ++next) {
    if (!r.at(cur, next)) continue;
    elems.push_back(next);
    if (find_chain_rec(r, next, b, steps_left - 1, elems)) return true;
    elems.pop_back();
  }
  return false;
}

std::optional<Chain> find_power_chain(const BinRel& r, int a, int b, int steps) {
  std::vector<int> elems{a};
  if (!find_chain_rec(r, a, b, steps, elems)) return std::nullopt;
  return make_chain(std::move(elems), "R", "R");
}

}  // namespace

bool Hm3Report::all_pass() const {
  bool constructive = witness.has_value();
  return std::all_of(relations.begin(), relations.end(),
                     [&](const Hm3RelationResult& r) { return r.pass(constructive); });
}

Hm3Report hm3_equivalence_report(const FiniteAlgebra& alg, int n, int samples,
                                 std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  Hm3Report report;
  report.n = n;
  report.witness = hm_search(alg, n);

  std::vector<BinRel> rels = samples > 0
                                 ? sample_compatible_reflexive(alg, samples, seed)
                                 : enumerate_compatible_reflexive(alg);

  for (const BinRel& rel : rels) {
    Hm3RelationResult res{rel};
    BinRel rn1 = rel_power(rel, n - 1);
    res.op_inclusion = leq(opposite(rel), rn1);
    res.power_inclusion = leq(rel_power(rel, n), rn1);

    if (report.witness) {
      res.chains_ok = true;
      try {
        // every witnessing pair of R^op <= R^{n-1}, constructively
        for (auto [b, a] : rel.pairs()) {
          Chain chain = symmetrize_chain(alg, *report.witness, rel, a, b);
          ++res.symmetrize_checked;
          if (chain.elements.back() != b || !rn1.at(a, b)) res.chains_ok = false;
        }
        // every witnessing pair of R^n <= R^{n-1}, constructively
        BinRel rn = rel_power(rel, n);
        for (auto [a, b] : rn.pairs()) {
          std::optional<Chain> chain = find_power_chain(rel, a, b, n);
          if (!chain) {
            res.chains_ok = false;
            continue;
          }
          Chain shorter = shorten_chain(alg, *report.witness, rel, *chain);
          ++res.shorten_checked;
          if (shorter.steps() != n - 1 || shorter.elements.front() != a ||
              shorter.elements.back() != b || !rn1.at(a, b)) {
            res.chains_ok = false;
          }
        }
      } catch (const std::logic_error&) {
        res.chains_ok = false;
      }
    }
    report.relations.push_back(std::move(res));
  }
  return report;
}

}  // namespace permut
