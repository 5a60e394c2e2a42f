#include "permut/term.hpp"

#include <cassert>
#include <cctype>
#include <unordered_map>

#include "permut/algebra.hpp"
#include "permut/errors.hpp"

namespace permut {

Term Term::var(int index) {
  assert(index >= 0);
  auto node = std::make_shared<Node>();
  node->var = index;
  return Term(std::move(node));
}

Term Term::app(std::string symbol, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->symbol = std::move(symbol);
  node->args = std::move(args);
  return Term(std::move(node));
}

bool Term::is_var() const { return node_->var >= 0; }
int Term::var_index() const { return node_->var; }
const std::string& Term::symbol() const { return node_->symbol; }
const std::vector<Term>& Term::args() const { return node_->args; }

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->var != other.node_->var) return false;
  if (node_->var >= 0) return true;
  if (node_->symbol != other.node_->symbol) return false;
  if (node_->args.size() != other.node_->args.size()) return false;
  for (std::size_t i = 0; i < node_->args.size(); ++i) {
    if (node_->args[i] != other.node_->args[i]) return false;
  }
  return true;
}

int Term::max_var() const {
  if (is_var()) return var_index();
  int m = -1;
  for (const Term& t : args()) m = std::max(m, t.max_var());
  return m;
}

std::string Term::str(const std::vector<std::string>& var_names) const {
  if (is_var()) {
    int v = var_index();
    if (v < static_cast<int>(var_names.size())) return var_names[v];
    return "x" + std::to_string(v);
  }
  std::string out = symbol();
  if (args().empty()) return out;
  out += "(";
  for (std::size_t i = 0; i < args().size(); ++i) {
    if (i) out += ", ";
    out += args()[i].str(var_names);
  }
  out += ")";
  return out;
}

Term Term::substitute(const std::vector<Term>& replacement) const {
  if (is_var()) {
    int v = var_index();
    if (v < static_cast<int>(replacement.size()) && !replacement[v].empty()) {
      return replacement[v];
    }
    return *this;
  }
  // Memoize on node identity so shared subterms stay shared.
  std::unordered_map<const void*, Term> memo;
  struct Rec {
    const std::vector<Term>& repl;
    std::unordered_map<const void*, Term>& memo;
    Term operator()(const Term& t) {
      if (t.is_var()) {
        int v = t.var_index();
        if (v < static_cast<int>(repl.size()) && !repl[v].empty()) {
          return repl[v];
        }
        return t;
      }
      auto it = memo.find(t.id());
      if (it != memo.end()) return it->second;
      std::vector<Term> new_args;
      new_args.reserve(t.args().size());
      for (const Term& a : t.args()) new_args.push_back((*this)(a));
      Term out = Term::app(t.symbol(), std::move(new_args));
      memo.emplace(t.id(), out);
      return out;
    }
  } rec{replacement, memo};
  return rec(*this);
}

namespace {

int eval_rec(const FiniteAlgebra& alg, const Term& t, const Assignment& a,
             std::unordered_map<const void*, int>& memo) {
  if (t.is_var()) {
    int v = t.var_index();
    if (v >= static_cast<int>(a.size()) || a[v] < 0) {
      throw eval_error(eval_error::kind::unassigned_variable,
                       "unassigned variable #" + std::to_string(v));
    }
    return a[v];
  }
  auto it = memo.find(t.id());
  if (it != memo.end()) return it->second;
  int op = alg.sig().index_of(t.symbol());
  if (op < 0) {
    throw eval_error(eval_error::kind::unknown_symbol,
                     "unknown symbol '" + t.symbol() + "'");
  }
  int arity = alg.sig().at(op).arity;
  if (arity != static_cast<int>(t.args().size())) {
    throw eval_error(eval_error::kind::arity_mismatch,
                     "symbol '" + t.symbol() + "' has arity " +
                         std::to_string(arity) + ", applied to " +
                         std::to_string(t.args().size()) + " arguments");
  }
  std::vector<int> vals(t.args().size());
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    vals[i] = eval_rec(alg, t.args()[i], a, memo);
  }
  int out = alg.apply(op, vals);
  memo.emplace(t.id(), out);
  return out;
}

}  // namespace

int eval_term(const FiniteAlgebra& alg, const Term& t, const Assignment& a) {
  std::unordered_map<const void*, int> memo;
  return eval_rec(alg, t, a, memo);
}

namespace {

struct TermParser {
  const FiniteAlgebra& alg;
  const std::vector<std::string>& var_names;
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error("term '" + text + "', column " + std::to_string(pos + 1) +
                      ": " + msg);
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' ||
          c == ',') {
        break;
      }
      ++pos;
    }
    if (pos == start) fail("expected an identifier");
    return text.substr(start, pos - start);
  }

  Term parse() {
    std::string name = ident();
    skip_ws();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;  // '('
      int op = alg.sig().index_of(name);
      if (op < 0) fail("unknown symbol '" + name + "'");
      std::vector<Term> args;
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
      } else {
        while (true) {
          args.push_back(parse());
          skip_ws();
          if (pos >= text.size()) fail("missing ')'");
          if (text[pos] == ',') {
            ++pos;
            continue;
          }
          if (text[pos] == ')') {
            ++pos;
            break;
          }
          fail("expected ',' or ')'");
        }
      }
      if (static_cast<int>(args.size()) != alg.sig().at(op).arity) {
        fail("symbol '" + name + "' has arity " +
             std::to_string(alg.sig().at(op).arity) + ", got " +
             std::to_string(args.size()) + " arguments");
      }
      return Term::app(name, std::move(args));
    }
    // Bare identifier: a declared variable, else a nullary symbol.
    for (std::size_t v = 0; v < var_names.size(); ++v) {
      if (var_names[v] == name) return Term::var(static_cast<int>(v));
    }
    int op = alg.sig().index_of(name);
    if (op >= 0 && alg.sig().at(op).arity == 0) return Term::app(name, {});
    fail("'" + name + "' is neither a declared variable nor a nullary symbol");
  }
};

}  // namespace

Term parse_term(const FiniteAlgebra& alg, const std::string& text,
                const std::vector<std::string>& var_names) {
  TermParser p{alg, var_names, text};
  Term t = p.parse();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input after term");
  return t;
}

std::vector<std::string> ternary_var_names() { return {"x", "y", "z"}; }

std::vector<std::string> nary_var_names(int n) {
  std::vector<std::string> names;
  names.reserve(n + 1);
  for (int i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace permut
