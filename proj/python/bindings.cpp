#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "permut/algebra.hpp"
#include "permut/binrel.hpp"
#include "permut/chains.hpp"
#include "permut/congruence.hpp"
#include "permut/errors.hpp"
#include "permut/hm.hpp"
#include "permut/relcheck.hpp"

namespace py = pybind11;
using namespace permut;

namespace {

using PairList = std::vector<std::pair<int, int>>;

BinRel rel_of(int size, const PairList& pairs) {
  return BinRel::from_pairs(size, pairs);
}

std::vector<Term> parse_terms(const FiniteAlgebra& alg,
                              const std::vector<std::string>& texts,
                              const std::vector<std::string>& vars) {
  std::vector<Term> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(parse_term(alg, t, vars));
  return out;
}

std::vector<std::string> term_strings(const std::vector<Term>& terms,
                                      const std::vector<std::string>& vars) {
  std::vector<std::string> out;
  out.reserve(terms.size());
  for (const Term& t : terms) out.push_back(t.str(vars));
  return out;
}

py::list report_to_py(const VerifyReport& report) {
  py::list out;
  for (const IdentityResult& r : report.identities) {
    out.append(py::make_tuple(r.identity, r.passed, r.failure_text));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_permut, m) {
  m.doc() = "finite universal-algebra n-permutability toolkit";

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<FiniteAlgebra>(m, "FiniteAlgebra")
      .def_property_readonly("name", &FiniteAlgebra::name)
      .def_property_readonly("size", &FiniteAlgebra::size)
      .def_property_readonly("signature",
                             [](const FiniteAlgebra& a) {
                               std::vector<std::pair<std::string, int>> out;
                               for (const OpSym& s : a.sig().symbols()) {
                                 out.emplace_back(s.name, s.arity);
                               }
                               return out;
                             })
      .def("apply",
           [](const FiniteAlgebra& a, const std::string& op,
              const std::vector<int>& args) {
             int idx = a.sig().index_of(op);
             if (idx < 0) throw py::value_error("unknown symbol '" + op + "'");
             if (static_cast<int>(args.size()) != a.sig().at(idx).arity) {
               throw py::value_error("arity mismatch for '" + op + "'");
             }
             for (int v : args) {
               if (v < 0 || v >= a.size()) throw py::value_error("element out of range");
             }
             return a.apply(idx, args);
           },
           py::arg("op"), py::arg("args"))
      .def("eval",
           [](const FiniteAlgebra& a, const std::string& term,
              const std::vector<std::string>& variables,
              const std::vector<int>& assignment) {
             return eval_term(a, parse_term(a, term, variables), assignment);
           },
           py::arg("term"), py::arg("variables"), py::arg("assignment"))
      .def("__repr__", [](const FiniteAlgebra& a) {
        return "<FiniteAlgebra " + a.name() + " size=" + std::to_string(a.size()) +
               " ops=" + std::to_string(a.num_ops()) + ">";
      });

  m.def("parse_algebra", &parse_algebra, py::arg("text"),
        py::arg("source") = "<string>");
  m.def("load_algebra", &load_algebra_file, py::arg("path"));
  m.def("serialize_algebra", &serialize_algebra, py::arg("algebra"));
  m.def("direct_power", &direct_power, py::arg("algebra"), py::arg("exponent"),
        py::arg("max_universe") = 4096);

  // --- term witnesses ---
  m.def(
      "min_degree",
      [](const FiniteAlgebra& a, std::size_t budget) {
        return min_degree(a, budget);
      },
      py::arg("algebra"), py::arg("budget") = kDefaultClosureBudget,
      "Least n admitting Hagemann-Mitschke terms, or None when no n does.");

  m.def(
      "hm_search",
      [](const FiniteAlgebra& a, int n,
         std::size_t budget) -> std::optional<std::vector<std::string>> {
        auto w = hm_search(a, n, budget);
        if (!w) return std::nullopt;
        return term_strings(w->terms, ternary_var_names());
      },
      py::arg("algebra"), py::arg("n"), py::arg("budget") = kDefaultClosureBudget,
      "Witness terms w1..w_{n-1} over (x, y, z), or None.");

  m.def(
      "verify_hm",
      [](const FiniteAlgebra& a, const std::vector<std::string>& terms, int n) {
        auto parsed = parse_terms(a, terms, ternary_var_names());
        return report_to_py(verify_hm(a, parsed, n));
      },
      py::arg("algebra"), py::arg("terms"), py::arg("n"),
      "Per-identity (identity, passed, failure) list.");

  m.def(
      "verify_nary",
      [](const FiniteAlgebra& a, const std::vector<std::string>& terms, int n) {
        auto parsed = parse_terms(a, terms, nary_var_names(n));
        return report_to_py(verify_nary(a, parsed, n));
      },
      py::arg("algebra"), py::arg("terms"), py::arg("n"));

  m.def(
      "ternary_to_nary",
      [](const FiniteAlgebra& a, const std::vector<std::string>& terms, int n) {
        HMWitness w{n, parse_terms(a, terms, ternary_var_names())};
        return term_strings(ternary_to_nary(a, w).terms, nary_var_names(n));
      },
      py::arg("algebra"), py::arg("terms"), py::arg("n"));

  m.def(
      "nary_to_ternary",
      [](const FiniteAlgebra& a, const std::vector<std::string>& terms, int n) {
        NaryWitness v{n, parse_terms(a, terms, nary_var_names(n))};
        return term_strings(nary_to_ternary(a, v).terms, ternary_var_names());
      },
      py::arg("algebra"), py::arg("terms"), py::arg("n"));

  // --- congruences ---
  m.def(
      "principal_congruence",
      [](const FiniteAlgebra& a, int x, int y) {
        return principal_congruence(a, x, y).blocks();
      },
      py::arg("algebra"), py::arg("a"), py::arg("b"),
      "Blocks of the least congruence identifying a and b.");

  m.def(
      "congruences",
      [](const FiniteAlgebra& a) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const Congruence& c : all_congruences(a)) out.push_back(c.blocks());
        return out;
      },
      py::arg("algebra"), "Blocks of every congruence, deterministic order.");

  m.def(
      "permutability_degree",
      [](const FiniteAlgebra& a, const std::vector<int>& rep_r,
         const std::vector<int>& rep_s, int max_n) {
        return permutability_degree(Congruence(a, rep_r), Congruence(a, rep_s),
                                    max_n);
      },
      py::arg("algebra"), py::arg("rep_r"), py::arg("rep_s"),
      py::arg("max_n") = 0,
      "Least n with (R,S)_n = (S,R)_n, or None up to max_n. Partitions are "
      "representative arrays.");

  m.def("algebra_permutability", &algebra_permutability, py::arg("algebra"),
        py::arg("n"));

  // --- relation calculus ---
  m.def(
      "compose",
      [](int size, const PairList& r, const PairList& s) {
        return compose(rel_of(size, r), rel_of(size, s)).pairs();
      },
      py::arg("size"), py::arg("r"), py::arg("s"));

  m.def(
      "alternating",
      [](int size, const PairList& r, const PairList& s, int n) {
        return alternating(rel_of(size, r), rel_of(size, s), n).pairs();
      },
      py::arg("size"), py::arg("r"), py::arg("s"), py::arg("n"));

  m.def(
      "rel_power",
      [](int size, const PairList& r, int n) {
        return rel_power(rel_of(size, r), n).pairs();
      },
      py::arg("size"), py::arg("r"), py::arg("n"));

  m.def(
      "is_compatible",
      [](const FiniteAlgebra& a, const PairList& r) {
        return is_compatible(a, rel_of(a.size(), r));
      },
      py::arg("algebra"), py::arg("r"));

  m.def(
      "compatible_reflexive_closure",
      [](const FiniteAlgebra& a, const PairList& pairs) {
        return compatible_reflexive_closure(a, pairs).pairs();
      },
      py::arg("algebra"), py::arg("pairs"));

  m.def(
      "check_reflexive_char",
      [](const FiniteAlgebra& a, int n, const PairList& e) {
        return check_reflexive_char(a, n, rel_of(a.size(), e));
      },
      py::arg("algebra"), py::arg("n"), py::arg("e"));

  m.def(
      "lemma43_check",
      [](int size, const PairList& r, const PairList& s, int n) {
        auto res = lemma43_check(rel_of(size, r), rel_of(size, s), n);
        return py::make_tuple(res.first_inclusion, res.second_inclusion);
      },
      py::arg("size"), py::arg("r"), py::arg("s"), py::arg("n"));

  m.def(
      "rts_symmetry_check",
      [](const FiniteAlgebra& a) {
        py::list out;
        for (const RtsEntry& e : rts_symmetry_check(a).entries) {
          out.append(py::make_tuple(e.rel.pairs(), e.symmetric));
        }
        return out;
      },
      py::arg("algebra"),
      "(pairs, symmetric) for every compatible reflexive transitive relation.");

  m.def(
      "hm3_report",
      [](const FiniteAlgebra& a, int n, int samples, std::uint64_t seed) {
        Hm3Report report = hm3_equivalence_report(a, n, samples, seed);
        py::dict out;
        out["n"] = report.n;
        out["witness"] =
            report.witness
                ? py::cast(term_strings(report.witness->terms, ternary_var_names()))
                : py::object(py::none());
        py::list rels;
        for (const Hm3RelationResult& r : report.relations) {
          py::dict d;
          d["pairs"] = r.rel.pairs();
          d["op_inclusion"] = r.op_inclusion;
          d["power_inclusion"] = r.power_inclusion;
          d["chains_ok"] = r.chains_ok;
          rels.append(d);
        }
        out["relations"] = rels;
        out["all_pass"] = report.all_pass();
        return out;
      },
      py::arg("algebra"), py::arg("n"), py::arg("samples") = 0,
      py::arg("seed") = 0x5eed);
}
