#include "permut/hm.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cctype>
#include <deque>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "permut/errors.hpp"

namespace permut {

PatternIndex::PatternIndex(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("universe must be nonempty");
  left_.assign(k * k, -1);
  right_.assign(k * k, -1);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      left_[a * k + b] = static_cast<int>(triples_.size());
      triples_.push_back({a, b, b});
    }
  }
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a == b) {
        right_[a * k + b] = left_[a * k + b];  // (a,a,a) stored once
      } else {
        right_[a * k + b] = static_cast<int>(triples_.size());
        triples_.push_back({a, a, b});
      }
    }
  }
}

std::vector<uint8_t> PatternIndex::projection(int which) const {
  std::vector<uint8_t> coords(triples_.size());
  for (std::size_t d = 0; d < triples_.size(); ++d) {
    coords[d] = static_cast<uint8_t>(triples_[d][which]);
  }
  return coords;
}

PatternSubpower build_pattern_subpower(const FiniteAlgebra& alg,
                                       std::size_t budget) {
  PatternIndex index(alg.size());
  PowerAlgebra ambient(alg, index.dim());
  std::vector<std::vector<uint8_t>> gens = {
      index.projection(0), index.projection(1), index.projection(2)};
  SubpowerClosure closure = SubpowerClosure::generate(ambient, gens, budget);
  return PatternSubpower{std::move(index), std::move(closure)};
}

PatternGraph::PatternGraph(const PatternSubpower& sub) {
  const PatternIndex& index = sub.index;
  const int k = index.k();

  std::unordered_map<std::string, int> ids;
  auto intern = [&](const std::vector<uint8_t>& face) {
    std::string key(face.begin(), face.end());
    auto [it, inserted] = ids.emplace(key, static_cast<int>(nodes_.size()));
    if (inserted) {
      nodes_.push_back(face);
      out_.emplace_back();
    }
    return it->second;
  };

  std::unordered_map<std::uint64_t, int> edge_seen;
  std::vector<uint8_t> left(k * k), right(k * k);
  for (std::size_t e = 0; e < sub.closure.size(); ++e) {
    const std::vector<uint8_t>& coords = sub.closure.coords(e);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        left[a * k + b] = coords[index.left_coord(a, b)];
        right[a * k + b] = coords[index.right_coord(a, b)];
      }
    }
    int from = intern(left);
    int to = intern(right);
    // first discovery wins, so witness terms have minimal closure depth
    std::uint64_t key = static_cast<std::uint64_t>(from) << 32 | static_cast<std::uint32_t>(to);
    if (edge_seen.emplace(key, static_cast<int>(edges_.size())).second) {
      out_[from].push_back(static_cast<int>(edges_.size()));
      edges_.push_back({from, to, static_cast<int>(e)});
    }
  }

  std::vector<uint8_t> pi1_face(k * k), pi2_face(k * k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      pi1_face[a * k + b] = static_cast<uint8_t>(a);
      pi2_face[a * k + b] = static_cast<uint8_t>(b);
    }
  }
  pi1_ = intern(pi1_face);  // faces of the generator projections; always present
  pi2_ = intern(pi2_face);
}

namespace {

struct BfsTree {
  std::vector<int> dist;
  std::vector<int> parent_edge;
};

BfsTree bfs(const PatternGraph& g, int start) {
  BfsTree t;
  t.dist.assign(g.num_nodes(), -1);
  t.parent_edge.assign(g.num_nodes(), -1);
  std::deque<int> queue{start};
  t.dist[start] = 0;
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop_front();
    for (int eid : g.out_edges(node)) {
      int to = g.edges()[eid].to;
      if (t.dist[to] < 0) {
        t.dist[to] = t.dist[node] + 1;
        t.parent_edge[to] = eid;
        queue.push_back(to);
      }
    }
  }
  return t;
}

}  // namespace

std::optional<int> PatternGraph::shortest_distance() const {
  BfsTree t = bfs(*this, pi1_);
  if (t.dist[pi2_] < 0) return std::nullopt;
  return t.dist[pi2_];
}

std::optional<std::vector<int>> PatternGraph::walk(int len) const {
  BfsTree t = bfs(*this, pi1_);
  if (t.dist[pi2_] < 0 || t.dist[pi2_] > len) return std::nullopt;

  std::vector<int> elems;
  for (int node = pi2_; node != pi1_;) {
    const Edge& e = edges_[t.parent_edge[node]];
    elems.push_back(e.elem);
    node = e.from;
  }
  std::reverse(elems.begin(), elems.end());

  if (static_cast<int>(elems.size()) < len) {
    // pad at pi2 with the third projection's self-loop, w(x,y,z) = z
    auto it = std::find_if(out_[pi2_].begin(), out_[pi2_].end(), [&](int eid) {
      return edges_[eid].to == pi2_;
    });
    if (it == out_[pi2_].end()) {
      throw std::logic_error("pattern graph lost the projection self-loop");
    }
    while (static_cast<int>(elems.size()) < len) {
      elems.push_back(edges_[*it].elem);
    }
  }
  return elems;
}

// --- verification ------------------------------------------------------------

namespace {

[[noreturn]] void shape_error(const std::string& msg) {
  throw std::invalid_argument(msg);
}

std::string render_assignment(const Assignment& a,
                              const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += names[i] + "=" + std::to_string(a[i]);
  }
  return out;
}

// Checks lhs == rhs over all assignments of the listed free variables; the
// arg_of functions map a term argument position to the evaluated value.
struct IdentityChecker {
  const FiniteAlgebra& alg;
  std::vector<IdentityResult> results;

  // lhs/rhs described by a term (or a bare value functional) evaluated under
  // per-position variable assignments produced from a free-variable vector.
  void check(const std::string& name, int num_free,
             const std::vector<std::string>& free_names,
             const std::function<int(const std::vector<int>&)>& lhs,
             const std::function<int(const std::vector<int>&)>& rhs) {
    IdentityResult res;
    res.identity = name;
    res.passed = true;
    const int k = alg.size();
    std::vector<int> free(num_free, 0);
    while (true) {
      if (lhs(free) != rhs(free)) {
        res.passed = false;
        res.failure = free;
        res.failure_text = render_assignment(free, free_names);
        break;
      }
      int j = num_free - 1;
      for (; j >= 0; --j) {
        if (++free[j] < k) break;
        free[j] = 0;
      }
      if (j < 0) break;
    }
    results.push_back(std::move(res));
  }
};

}  // namespace

VerifyReport verify_hm(const FiniteAlgebra& alg, std::span<const Term> candidate,
                       int n) {
  if (n < 2) shape_error("n must be at least 2");
  if (static_cast<int>(candidate.size()) != n - 1) {
    shape_error("expected " + std::to_string(n - 1) + " ternary terms, got " +
                std::to_string(candidate.size()));
  }
  for (const Term& t : candidate) {
    if (t.empty()) shape_error("empty term");
    if (t.max_var() > 2) shape_error("term is not ternary");
  }

  IdentityChecker checker{alg, {}};
  auto names = ternary_var_names();
  auto eval_at = [&](const Term& t, int a, int b, int c) {
    return eval_term(alg, t, {a, b, c});
  };

  // w1(x,y,y) = x
  checker.check("w1(x,y,y) = x", 2, {"x", "y"},
                [&](const std::vector<int>& f) {
                  return eval_at(candidate[0], f[0], f[1], f[1]);
                },
                [&](const std::vector<int>& f) { return f[0]; });
  // w_i(x,x,y) = w_{i+1}(x,y,y)
  for (int i = 1; i <= n - 2; ++i) {
    std::string name = "w" + std::to_string(i) + "(x,x,y) = w" +
                       std::to_string(i + 1) + "(x,y,y)";
    checker.check(name, 2, {"x", "y"},
                  [&, i](const std::vector<int>& f) {
                    return eval_at(candidate[i - 1], f[0], f[0], f[1]);
                  },
                  [&, i](const std::vector<int>& f) {
                    return eval_at(candidate[i], f[0], f[1], f[1]);
                  });
  }
  // w_{n-1}(x,x,y) = y
  checker.check("w" + std::to_string(n - 1) + "(x,x,y) = y", 2, {"x", "y"},
                [&](const std::vector<int>& f) {
                  return eval_at(candidate[n - 2], f[0], f[0], f[1]);
                },
                [&](const std::vector<int>& f) { return f[1]; });

  VerifyReport report;
  report.identities = std::move(checker.results);
  report.ok = std::all_of(report.identities.begin(), report.identities.end(),
                          [](const IdentityResult& r) { return r.passed; });
  return report;
}

namespace {

// Doubled-argument pattern of the n-ary identities: position -> variable
// index. Even i doubles (x0,x0,x2,x2,...); odd i doubles (x0,x1,x1,x3,...).
std::vector<int> nary_pattern(int n, bool even_case) {
  std::vector<int> pat(n + 1);
  for (int j = 0; j <= n; ++j) {
    if (even_case) {
      pat[j] = j - (j % 2);
    } else {
      pat[j] = (j == 0) ? 0 : (j % 2 == 1 ? j : j - 1);
    }
  }
  return pat;
}

std::string pattern_text(const std::vector<int>& pat) {
  std::string out = "(";
  for (std::size_t j = 0; j < pat.size(); ++j) {
    if (j) out += ",";
    out += "x" + std::to_string(pat[j]);
  }
  return out + ")";
}

}  // namespace

VerifyReport verify_nary(const FiniteAlgebra& alg, std::span<const Term> candidate,
                         int n) {
  if (n < 2) shape_error("n must be at least 2");
  if (static_cast<int>(candidate.size()) != n + 1) {
    shape_error("expected " + std::to_string(n + 1) + " terms, got " +
                std::to_string(candidate.size()));
  }
  for (const Term& t : candidate) {
    if (t.empty()) shape_error("empty term");
    if (t.max_var() > n) shape_error("term has a variable past x" + std::to_string(n));
  }

  IdentityChecker checker{alg, {}};
  auto names = nary_var_names(n);

  // v0 and vn are projections on all assignments
  checker.check("v0(x0..x" + std::to_string(n) + ") = x0", n + 1, names,
                [&](const std::vector<int>& f) {
                  return eval_term(alg, candidate[0], f);
                },
                [&](const std::vector<int>& f) { return f[0]; });

  // middle identities: v_{i-1}(pattern) = v_i(pattern)
  for (int i = 1; i <= n; ++i) {
    std::vector<int> pat = nary_pattern(n, i % 2 == 0);
    // free variables are the distinct indices used by the pattern
    std::vector<int> free_vars;
    for (int v : pat) {
      if (std::find(free_vars.begin(), free_vars.end(), v) == free_vars.end()) {
        free_vars.push_back(v);
      }
    }
    std::sort(free_vars.begin(), free_vars.end());
    std::vector<std::string> free_names;
    for (int v : free_vars) free_names.push_back("x" + std::to_string(v));

    auto eval_pattern = [&, pat, free_vars](const Term& t,
                                            const std::vector<int>& f) {
      Assignment a(pat.size());
      for (std::size_t j = 0; j < pat.size(); ++j) {
        auto it = std::find(free_vars.begin(), free_vars.end(), pat[j]);
        a[j] = f[it - free_vars.begin()];
      }
      return eval_term(alg, t, a);
    };
    std::string name = "v" + std::to_string(i - 1) + pattern_text(pat) + " = v" +
                       std::to_string(i) + pattern_text(pat);
    checker.check(name, static_cast<int>(free_vars.size()), free_names,
                  [&, i](const std::vector<int>& f) {
                    return eval_pattern(candidate[i - 1], f);
                  },
                  [&, i](const std::vector<int>& f) {
                    return eval_pattern(candidate[i], f);
                  });
  }

  checker.check("v" + std::to_string(n) + "(x0..x" + std::to_string(n) +
                    ") = x" + std::to_string(n),
                n + 1, names,
                [&](const std::vector<int>& f) {
                  return eval_term(alg, candidate[n], f);
                },
                [&](const std::vector<int>& f) { return f[n]; });

  VerifyReport report;
  report.identities = std::move(checker.results);
  report.ok = std::all_of(report.identities.begin(), report.identities.end(),
                          [](const IdentityResult& r) { return r.passed; });
  return report;
}

// --- search -------------------------------------------------------------------

std::optional<HMWitness> hm_search(const FiniteAlgebra& alg, int n,
                                   std::size_t budget) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  PatternSubpower sub = build_pattern_subpower(alg, budget);
  PatternGraph graph(sub);
  std::optional<std::vector<int>> walk = graph.walk(n - 1);
  if (!walk) return std::nullopt;

  HMWitness w;
  w.n = n;
  for (int elem : *walk) w.terms.push_back(sub.closure.term_of(elem));
  VerifyReport report = verify_hm(alg, w.terms, n);
  if (!report.ok) {
    throw std::logic_error(
        "internal invariant violation: pattern-graph walk fails verification");
  }
  return w;
}

std::optional<int> min_degree(const FiniteAlgebra& alg, std::size_t budget) {
  PatternSubpower sub = build_pattern_subpower(alg, budget);
  PatternGraph graph(sub);
  std::optional<int> dist = graph.shortest_distance();
  if (!dist) return std::nullopt;
  return std::max(*dist + 1, 2);
}

// --- conversions ---------------------------------------------------------------

NaryWitness ternary_to_nary(const FiniteAlgebra& alg, const HMWitness& w) {
  const int n = w.n;
  NaryWitness v;
  v.n = n;
  v.terms.push_back(Term::var(0));
  for (int i = 1; i <= n - 1; ++i) {
    // v_i(x0..xn) = w_i(x_{i-1}, x_i, x_{i+1})
    v.terms.push_back(w.terms[i - 1].substitute(
        {Term::var(i - 1), Term::var(i), Term::var(i + 1)}));
  }
  v.terms.push_back(Term::var(n));
  VerifyReport report = verify_nary(alg, v.terms, n);
  if (!report.ok) {
    throw std::invalid_argument("input ternary witness does not verify");
  }
  return v;
}

HMWitness nary_to_ternary(const FiniteAlgebra& alg, const NaryWitness& v) {
  const int n = v.n;
  HMWitness w;
  w.n = n;
  for (int i = 1; i <= n - 1; ++i) {
    // w_i(x,y,z) = v_i(x,...,x, y, z,...,z) with i copies of x, n-i of z
    std::vector<Term> repl(n + 1);
    for (int j = 0; j <= n; ++j) {
      repl[j] = j < i ? Term::var(0) : (j == i ? Term::var(1) : Term::var(2));
    }
    w.terms.push_back(v.terms[i].substitute(repl));
  }
  VerifyReport report = verify_hm(alg, w.terms, n);
  if (!report.ok) {
    throw std::invalid_argument("input n-ary witness does not verify");
  }
  return w;
}

// --- witness files ---------------------------------------------------------------

WitnessDoc parse_witness(const FiniteAlgebra& alg, const std::string& text,
                         const std::string& source) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  WitnessDoc doc;
  bool have_kind = false, have_n = false;
  int terms_seen = 0;

  auto fail = [&](const std::string& msg) -> void {
    throw parse_error(source, line_no, msg);
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = line;
    std::size_t h = trimmed.find('#');
    if (h != std::string::npos) trimmed.resize(h);
    std::istringstream ls(trimmed);
    std::string head;
    if (!(ls >> head)) continue;

    if (head == "algebra") {
      if (!(ls >> doc.algebra_name)) fail("missing algebra name");
    } else if (head == "kind") {
      std::string kind;
      if (!(ls >> kind)) fail("missing witness kind");
      if (kind == "ternary") {
        doc.nary = false;
      } else if (kind == "nary") {
        doc.nary = true;
      } else {
        fail("kind must be 'ternary' or 'nary', got '" + kind + "'");
      }
      have_kind = true;
    } else if (head == "n") {
      std::string val;
      if (!(ls >> val)) fail("missing value for n");
      try {
        doc.n = std::stoi(val);
      } catch (const std::exception&) {
        fail("bad value for n: '" + val + "'");
      }
      if (doc.n < 2) fail("n must be at least 2");
      have_n = true;
    } else {
      // a term line: "w1 = ..." or "v0 = ..."
      if (!have_kind || !have_n) fail("term line before 'kind' and 'n'");
      std::size_t eq = trimmed.find('=');
      if (eq == std::string::npos) fail("expected 'NAME = TERM'");
      std::string lhs = trimmed.substr(0, eq);
      // strip whitespace
      while (!lhs.empty() && std::isspace(static_cast<unsigned char>(lhs.back()))) lhs.pop_back();
      std::size_t s = 0;
      while (s < lhs.size() && std::isspace(static_cast<unsigned char>(lhs[s]))) ++s;
      lhs = lhs.substr(s);
      std::string expect = (doc.nary ? "v" + std::to_string(terms_seen)
                                     : "w" + std::to_string(terms_seen + 1));
      if (lhs != expect) fail("expected term '" + expect + "', got '" + lhs + "'");
      std::vector<std::string> vars =
          doc.nary ? nary_var_names(doc.n) : ternary_var_names();
      try {
        doc.terms.push_back(parse_term(alg, trimmed.substr(eq + 1), vars));
      } catch (const parse_error& e) {
        fail(e.what());
      }
      ++terms_seen;
    }
  }

  if (doc.algebra_name.empty()) fail("missing 'algebra' line");
  if (!have_kind) fail("missing 'kind' line");
  if (!have_n) fail("missing 'n' line");
  if (doc.algebra_name != alg.name()) {
    fail("witness references algebra '" + doc.algebra_name +
         "' but the given algebra is '" + alg.name() + "'");
  }
  int want = doc.nary ? doc.n + 1 : doc.n - 1;
  if (terms_seen != want) {
    fail("expected " + std::to_string(want) + " terms, got " +
         std::to_string(terms_seen));
  }
  return doc;
}

WitnessDoc load_witness_file(const FiniteAlgebra& alg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_witness(alg, buf.str(), path);
}

std::string serialize_witness(const WitnessDoc& doc) {
  std::ostringstream out;
  out << "algebra " << doc.algebra_name << "\n";
  out << "kind " << (doc.nary ? "nary" : "ternary") << "\n";
  out << "n " << doc.n << "\n";
  std::vector<std::string> vars =
      doc.nary ? nary_var_names(doc.n) : ternary_var_names();
  for (std::size_t i = 0; i < doc.terms.size(); ++i) {
    std::string name = doc.nary ? "v" + std::to_string(i)
                                : "w" + std::to_string(i + 1);
    out << name << " = " << doc.terms[i].str(vars) << "\n";
  }
  return out.str();
}

WitnessDoc to_doc(const std::string& algebra_name, const HMWitness& w) {
  return WitnessDoc{algebra_name, false, w.n, w.terms};
}

WitnessDoc to_doc(const std::string& algebra_name, const NaryWitness& v) {
  return WitnessDoc{algebra_name, true, v.n, v.terms};
}

}  // namespace permut
