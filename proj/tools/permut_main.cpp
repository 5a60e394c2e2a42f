// permut: decide congruence n-permutability of finite algebras, extract and
// verify Hagemann-Mitschke term witnesses, and cross-check the relation
// characterizations on concrete instances.
//
// Exit codes: 0 = property holds / witness found, 1 = property fails / no
// witness, 2 = input or budget error.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "permut/algebra.hpp"
#include "permut/binrel.hpp"
#include "permut/chains.hpp"
#include "permut/congruence.hpp"
#include "permut/errors.hpp"
#include "permut/hm.hpp"
#include "permut/relcheck.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;

using permut::BinRel;
using permut::Congruence;
using permut::FiniteAlgebra;

void write_output(const std::string& text, const std::string& out_path) {
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw permut::parse_error(out_path, 0, "cannot open for writing");
    out << text;
  }
}

// "cg(a,b)" or "cN" against the deterministic order of `cong list`
Congruence parse_congruence_name(const FiniteAlgebra& alg, const std::string& name) {
  auto bad = [&]() -> permut::parse_error {
    return permut::parse_error("bad congruence name '" + name +
                               "', expected cg(a,b) or cN");
  };
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw bad();
      return v;
    } catch (const std::invalid_argument&) {
      throw bad();
    } catch (const std::out_of_range&) {
      throw bad();
    }
  };
  if (name.rfind("cg(", 0) == 0 && name.back() == ')') {
    std::string inner = name.substr(3, name.size() - 4);
    std::size_t comma = inner.find(',');
    if (comma == std::string::npos) throw bad();
    return principal_congruence(alg, to_int(inner.substr(0, comma)),
                                to_int(inner.substr(comma + 1)));
  }
  if (name.size() >= 2 && name[0] == 'c') {
    int idx = to_int(name.substr(1));
    auto cons = all_congruences(alg);
    if (idx < 0 || idx >= static_cast<int>(cons.size())) {
      throw permut::parse_error("congruence index " + name + " out of range (" +
                                std::to_string(cons.size()) + " congruences)");
    }
    return cons[idx];
  }
  throw bad();
}

std::string blocks_text(const Congruence& c) {
  std::string out;
  for (const auto& block : c.blocks()) {
    if (!out.empty()) out += ",";
    out += "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(block[i]);
    }
    out += "}";
  }
  return out;
}

int run_verify(const FiniteAlgebra& alg, const permut::WitnessDoc& doc, int n) {
  if (n != doc.n) {
    throw permut::parse_error("witness file declares n=" + std::to_string(doc.n) +
                              " but --n " + std::to_string(n) + " was given");
  }
  permut::VerifyReport report =
      doc.nary ? verify_nary(alg, doc.terms, doc.n)
               : verify_hm(alg, doc.terms, doc.n);
  for (const auto& id : report.identities) {
    if (id.passed) {
      std::cout << id.identity << ": ok\n";
    } else {
      std::cout << id.identity << ": FAIL at " << id.failure_text << "\n";
    }
  }
  std::cout << (report.ok ? "witness verifies\n" : "witness fails\n");
  return report.ok ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite universal-algebra n-permutability toolkit"};
  app.require_subcommand(1);

  std::string file, witness_file, out_path, to_kind;
  std::string left, right, rel_text, pairs_text;
  int n = 2, max_degree = 0, samples = 0;
  std::size_t max_closure = permut::kDefaultClosureBudget;
  std::uint64_t seed = 0x5eed;

  std::function<int()> action;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "algebra file")->required();
  };

  // --- alg ---
  auto* alg_cmd = app.add_subcommand("alg", "algebra file operations");
  auto* alg_validate = alg_cmd->add_subcommand("validate", "parse and validate");
  add_file(alg_validate);
  alg_validate->callback([&] {
    action = [&]() {
      FiniteAlgebra a = permut::load_algebra_file(file);
      std::cout << "ok: name=" << a.name() << " size=" << a.size()
                << " ops=" << a.num_ops() << "\n";
      return kExitHolds;
    };
  });

  // --- terms ---
  auto* terms = app.add_subcommand("terms", "Hagemann-Mitschke term witnesses");
  auto* terms_find = terms->add_subcommand("find", "search a witness for a given n");
  terms_find->add_option("--n", n, "chain length parameter")->required();
  terms_find->add_option("--max-closure", max_closure, "closure element budget");
  terms_find->add_option("--out", out_path, "also write the witness to a file");
  add_file(terms_find);
  terms_find->callback([&] {
    action = [&]() {
      FiniteAlgebra a = permut::load_algebra_file(file);
      auto w = permut::hm_search(a, n, max_closure);
      if (!w) {
        std::cout << "none\n";
        return kExitFails;
      }
      write_output(permut::serialize_witness(permut::to_doc(a.name(), *w)), out_path);
      return kExitHolds;
    };
  });

  auto* terms_mindeg = terms->add_subcommand("mindegree", "least n with a witness");
  terms_mindeg->add_option("--max-closure", max_closure, "closure element budget");
  terms_mindeg->add_option("--out", out_path, "also write the witness to a file");
  add_file(terms_mindeg);
  terms_mindeg->callback([&] {
    action = [&]() {
      FiniteAlgebra a = permut::load_algebra_file(file);
      auto deg = permut::min_degree(a, max_closure);
      if (!deg) {
        std::cout << "not n-permutable for any n\n";
        return kExitFails;
      }
      std::cout << "min degree: " << *deg << "\n";
      auto w = permut::hm_search(a, *deg, max_closure);
      if (!w) throw std::logic_error("mindegree found n without a witness");
      write_output(permut::serialize_witness(permut::to_doc(a.name(), *w)), out_path);
      return kExitHolds;
    };
  });

  auto* terms_verify = terms->add_subcommand("verify", "check a witness file");
  terms_verify->add_option("--n", n, "expected n")->required();
  terms_verify->add_option("--witness", witness_file, "witness file")->required();
  add_file(terms_verify);
  terms_verify->callback([&] {
    action = [&]() {
      FiniteAlgebra a = permut::load_algebra_file(file);
      permut::WitnessDoc doc = permut::load_witness_file(a, witness_file);
      return run_verify(a, doc, n);
    };
  });

  auto* terms_convert = terms->add_subcommand("convert", "ternary <-> (n+1)-ary");
  terms_convert->add_option("--to", to_kind, "target kind: nary or ternary")
      ->required()
      ->check(CLI::IsMember({"nary", "ternary"}));
  terms_convert->add_option("--witness", witness_file, "witness file")->required();
  terms_convert->add_option("--out", out_path, "also write the result to a file");
  add_file(terms_convert);
  terms_convert->callback([&] {
    action = [&]() {
      FiniteAlgebra a = permut::load_algebra_file(file);
      permut::WitnessDoc doc = permut::load_witness_file(a, witness_file);
      permut::WitnessDoc converted;
      if (to_kind == "nary") {
        if (doc.nary) throw permut::parse_error("witness is already n-ary");
        permut::HMWitness w{doc.n, doc.terms};
        converted = permut::to_doc(a.name(), permut::ternary_to_nary(a, w));
      } else {
        if (!doc.nary) throw permut::parse_error("witness is already ternary");
        permut::NaryWitness v{doc.n, doc.terms};
        converted = permut::to_doc(a.name(), permut::nary_to_ternary(a, v));
      }
      write_output(permut::serialize_witness(converted), out_path);
      return kExitHolds;
    };
  });

  // --- cong ---
  auto* cong = app.add_subcommand("cong", "congruences");
  auto* cong_list = cong->add_subcommand("list", "enumerate all congruences");
  add_file(cong_list);
  cong_list->callback([&] {
    action = [&]() {
      FiniteAlgebra a = permut::load_algebra_file(file);
      auto cons = all_congruences(a);
      for (std::size_t i = 0; i < cons.size(); ++i) {
        std::cout << "c" << i << ": " << blocks_text(cons[i]) << "\n";
      }
      return kExitHolds;
    };
  });

  auto* cong_degree = cong->add_subcommand("degree", "permutability degree of a pair");
  cong_degree->add_option("--left", left, "congruence, cg(a,b) or cN")->required();
  cong_degree->add_option("--right", right, "congruence, cg(a,b) or cN")->required();
  cong_degree->add_option("--max", max_degree, "search bound (default 2*size^2)");
  add_file(cong_degree);
  cong_degree->callback([&] {
    action = [&]() {
      FiniteAlgebra a = permut::load_algebra_file(file);
      Congruence r = parse_congruence_name(a, left);
      Congruence s = parse_congruence_name(a, right);
      int bound = max_degree > 0 ? max_degree : 2 * a.size() * a.size();
      auto deg = permut::permutability_degree(r, s, bound);
      if (!deg) {
        std::cout << "none up to " << bound << "\n";
        return kExitFails;
      }
      std::cout << "degree: " << *deg << "\n";
      return kExitHolds;
    };
  });

  // --- rel ---
  auto* rel = app.add_subcommand("rel", "binary relation calculus");
  auto add_rel_cmd = [&](const char* name, const char* desc) {
    auto* cmd = rel->add_subcommand(name, desc);
    add_file(cmd);
    return cmd;
  };

  auto* rel_compose = add_rel_cmd("compose", "compose two relations (first;second)");
  rel_compose->add_option("--left", left, "first-step relation, pairs a,b;c,d")->required();
  rel_compose->add_option("--right", right, "second-step relation")->required();
  rel_compose->callback([&] {
    action = [&]() {
      FiniteAlgebra a = permut::load_algebra_file(file);
      BinRel r = permut::parse_relation(left, a.size());
      BinRel s = permut::parse_relation(right, a.size());
      std::cout << permut::format_relation(permut::compose(r, s)) << "\n";
      return kExitHolds;
    };
  });

  auto* rel_alt = add_rel_cmd("alt", "alternating composite (R,S)_n");
  rel_alt->add_option("--left", left, "relation R")->required();
  rel_alt->add_option("--right", right, "relation S")->required();
  rel_alt->add_option("--n", n, "number of alternating steps")->required();
  rel_alt->callback([&] {
    action = [&]() {
      FiniteAlgebra a = permut::load_algebra_file(file);
      BinRel r = permut::parse_relation(left, a.size());
      BinRel s = permut::parse_relation(right, a.size());
      std::cout << permut::format_relation(permut::alternating(r, s, n)) << "\n";
      return kExitHolds;
    };
  });

  auto* rel_pow = add_rel_cmd("power", "relation power R^n");
  rel_pow->add_option("--rel", rel_text, "relation R")->required();
  rel_pow->add_option("--n", n, "power")->required();
  rel_pow->callback([&] {
    action = [&]() {
      FiniteAlgebra a = permut::load_algebra_file(file);
      BinRel r = permut::parse_relation(rel_text, a.size());
      std::cout << permut::format_relation(permut::rel_power(r, n)) << "\n";
      return kExitHolds;
    };
  });

  auto* rel_closure = add_rel_cmd("closure", "compatible reflexive closure of pairs");
  rel_closure->add_option("--pairs", pairs_text, "generator pairs a,b;c,d");
  rel_closure->callback([&] {
    action = [&]() {
      FiniteAlgebra a = permut::load_algebra_file(file);
      BinRel gen = permut::parse_relation(pairs_text, a.size());
      std::cout << permut::format_relation(
                       permut::compatible_reflexive_closure(a, gen.pairs()))
                << "\n";
      return kExitHolds;
    };
  });

  auto* rel_check = add_rel_cmd("check", "reflexive/symmetric/transitive/compatible");
  rel_check->add_option("--rel", rel_text, "relation to check")->required();
  rel_check->callback([&] {
    action = [&]() {
      FiniteAlgebra a = permut::load_algebra_file(file);
      BinRel r = permut::parse_relation(rel_text, a.size());
      auto verdict = [](bool b) { return b ? "yes" : "no"; };
      std::cout << "reflexive: " << verdict(permut::is_reflexive(r)) << "\n"
                << "symmetric: " << verdict(permut::is_symmetric(r)) << "\n"
                << "transitive: " << verdict(permut::is_transitive(r)) << "\n"
                << "compatible: " << verdict(permut::is_compatible(a, r)) << "\n";
      return kExitHolds;
    };
  });

  // --- xcheck ---
  auto* xcheck = app.add_subcommand("xcheck", "characterization cross-checks");

  auto* x_hm3 = xcheck->add_subcommand(
      "hm3", "R^op <= R^{n-1} and R^n <= R^{n-1} on compatible reflexive relations");
  x_hm3->add_option("--n", n, "permutability parameter")->required();
  x_hm3->add_option("--samples", samples, "sample size (default: exhaustive)");
  x_hm3->add_option("--seed", seed, "sampling seed");
  add_file(x_hm3);
  x_hm3->callback([&] {
    action = [&]() {
      FiniteAlgebra a = permut::load_algebra_file(file);
      permut::Hm3Report report = permut::hm3_equivalence_report(a, n, samples, seed);
      if (report.witness) {
        std::cout << "witness for n=" << n << " found; constructive checks enabled\n";
      } else {
        std::cout << "no witness for n=" << n
                  << "; constructive checks inapplicable\n";
      }
      for (std::size_t i = 0; i < report.relations.size(); ++i) {
        const auto& res = report.relations[i];
        std::cout << "R" << i << " [" << permut::format_relation(res.rel) << "]"
                  << " op<=pow(n-1): " << (res.op_inclusion ? "ok" : "VIOLATED")
                  << " pow(n)<=pow(n-1): "
                  << (res.power_inclusion ? "ok" : "VIOLATED");
        if (report.witness) {
          std::cout << " chains: " << (res.chains_ok ? "ok" : "FAILED") << " ("
                    << res.symmetrize_checked << " symmetrize, "
                    << res.shorten_checked << " shorten)";
        }
        std::cout << "\n";
      }
      bool ok = report.all_pass();
      std::cout << (ok ? "all relations pass\n" : "violations found\n");
      return ok ? kExitHolds : kExitFails;
    };
  });

  auto* x_rts = xcheck->add_subcommand(
      "rts", "symmetry of compatible reflexive transitive relations");
  add_file(x_rts);
  x_rts->callback([&] {
    action = [&]() {
      FiniteAlgebra a = permut::load_algebra_file(file);
      permut::RtsReport report = permut::rts_symmetry_check(a);
      for (std::size_t i = 0; i < report.entries.size(); ++i) {
        const auto& e = report.entries[i];
        std::cout << "R" << i << " [" << permut::format_relation(e.rel) << "] "
                  << (e.symmetric ? "symmetric" : "NOT symmetric") << "\n";
      }
      bool ok = report.all_symmetric();
      std::cout << (ok ? "all reflexive transitive relations are symmetric\n"
                       : "asymmetric reflexive transitive relation found\n");
      return ok ? kExitHolds : kExitFails;
    };
  });

  auto* x_lemma = xcheck->add_subcommand(
      "lemma43", "(R,S)_{2n-2} <= (S,R)_{2n} <= (S,R)_{2n-2} on congruence pairs");
  x_lemma->add_option("--n", n, "parameter n")->required();
  add_file(x_lemma);
  x_lemma->callback([&] {
    action = [&]() {
      FiniteAlgebra a = permut::load_algebra_file(file);
      auto cons = all_congruences(a);
      bool all_ok = true;
      for (std::size_t i = 0; i < cons.size(); ++i) {
        for (std::size_t j = 0; j < cons.size(); ++j) {
          auto res = permut::lemma43_check(cons[i].to_binrel(),
                                           cons[j].to_binrel(), n);
          std::cout << "c" << i << ",c" << j
                    << " first: " << (res.first_inclusion ? "ok" : "VIOLATED")
                    << " second: " << (res.second_inclusion ? "ok" : "VIOLATED")
                    << "\n";
          all_ok = all_ok && res.ok();
        }
      }
      std::cout << (all_ok ? "all inclusions hold\n" : "violations found\n");
      return all_ok ? kExitHolds : kExitFails;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitError;
  }

  try {
    return action();
  } catch (const permut::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const permut::budget_error& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitError;
  }
}
