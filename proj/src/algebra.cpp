#include "permut/algebra.hpp"

#include <cassert>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "permut/errors.hpp"

namespace permut {

namespace {

// k^arity with a sanity cap; table sizes here are tiny by design.
std::size_t table_length(int size, int arity) {
  std::size_t len = 1;
  for (int i = 0; i < arity; ++i) {
    len *= static_cast<std::size_t>(size);
    if (len > 100'000'000) {
      throw std::invalid_argument("operation table too large");
    }
  }
  return len;
}

}  // namespace

Signature::Signature(std::vector<OpSym> symbols) : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const OpSym& s = symbols_[i];
    if (s.name.empty()) throw std::invalid_argument("empty operation name");
    if (s.arity < 0) throw std::invalid_argument("negative arity");
    if (!index_.emplace(s.name, static_cast<int>(i)).second) {
      throw std::invalid_argument("duplicate operation name '" + s.name + "'");
    }
  }
}

int Signature::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

FiniteAlgebra::FiniteAlgebra(std::string name, int size, Signature sig,
                             std::vector<std::vector<int>> tables)
    : name_(std::move(name)),
      size_(size),
      sig_(std::move(sig)),
      tables_(std::move(tables)) {
  if (size_ < 1) throw std::invalid_argument("algebra size must be positive");
  if (size_ > 255) throw std::invalid_argument("algebra size above 255");
  if (tables_.size() != static_cast<std::size_t>(sig_.size())) {
    throw std::invalid_argument("one table per operation symbol required");
  }
  for (int i = 0; i < sig_.size(); ++i) {
    std::size_t want = table_length(size_, sig_.at(i).arity);
    if (tables_[i].size() != want) {
      throw std::invalid_argument("table for '" + sig_.at(i).name + "' has " +
                                  std::to_string(tables_[i].size()) +
                                  " entries, expected " + std::to_string(want));
    }
    for (int v : tables_[i]) {
      if (v < 0 || v >= size_) {
        throw std::invalid_argument("table entry out of range for '" +
                                    sig_.at(i).name + "'");
      }
    }
  }
}

int FiniteAlgebra::apply(int op, std::span<const int> args) const {
  assert(op >= 0 && op < sig_.size());
  assert(static_cast<int>(args.size()) == sig_.at(op).arity);
  std::size_t idx = 0;
  for (int a : args) {
    assert(a >= 0 && a < size_);
    idx = idx * static_cast<std::size_t>(size_) + static_cast<std::size_t>(a);
  }
  return tables_[op][idx];
}

std::vector<int> power_coords(const FiniteAlgebra& base, int exponent, int e) {
  std::vector<int> coords(exponent);
  for (int i = exponent - 1; i >= 0; --i) {
    coords[i] = e % base.size();
    e /= base.size();
  }
  return coords;
}

FiniteAlgebra direct_power(const FiniteAlgebra& alg, int exponent,
                           int max_universe) {
  if (exponent < 1) throw std::invalid_argument("exponent must be positive");
  std::size_t universe = 1;
  for (int i = 0; i < exponent; ++i) {
    universe *= static_cast<std::size_t>(alg.size());
    if (universe > static_cast<std::size_t>(max_universe)) {
      throw budget_error("direct power universe exceeds " +
                         std::to_string(max_universe));
    }
  }
  int k = static_cast<int>(universe);
  std::vector<std::vector<int>> tables;
  for (int op = 0; op < alg.num_ops(); ++op) {
    int arity = alg.sig().at(op).arity;
    std::size_t len = 1;
    for (int i = 0; i < arity; ++i) len *= universe;
    std::vector<int> table(len);
    std::vector<int> args(arity, 0);
    std::vector<int> base_args(arity);
    for (std::size_t idx = 0; idx < len; ++idx) {
      int value = 0;
      for (int c = 0; c < exponent; ++c) {
        for (int j = 0; j < arity; ++j) {
          base_args[j] = power_coords(alg, exponent, args[j])[c];
        }
        value = value * alg.size() + alg.apply(op, base_args);
      }
      table[idx] = value;
      for (int j = arity - 1; j >= 0; --j) {  // odometer, last fastest
        if (++args[j] < k) break;
        args[j] = 0;
      }
    }
    tables.push_back(std::move(table));
  }
  return FiniteAlgebra(alg.name() + "^" + std::to_string(exponent), k,
                       alg.sig(), std::move(tables));
}

// --- text format -------------------------------------------------------------

namespace {

struct LineScanner {
  std::istringstream in;
  std::string source;
  int line_no = 0;
  std::string line;
  std::istringstream tokens;

  // Advances to the next token, crossing line boundaries; false at EOF.
  bool next_token(std::string& tok) {
    while (true) {
      if (tokens >> tok) {
        if (tok[0] == '#') {  // rest of line is comment
          tokens.str("");
          tokens.clear();
          continue;
        }
        return true;
      }
      if (!std::getline(in, line)) return false;
      ++line_no;
      tokens.str(line);
      tokens.clear();
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(source, line_no, msg);
  }
};

int parse_int(LineScanner& sc, const std::string& tok, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    sc.fail("expected an integer for " + what + ", got '" + tok + "'");
  }
}

}  // namespace

FiniteAlgebra parse_algebra(const std::string& text, const std::string& source) {
  LineScanner sc;
  sc.in.str(text);
  sc.source = source;

  std::string tok;
  std::string name;
  int size = -1;
  std::vector<OpSym> syms;
  std::vector<std::vector<int>> tables;

  while (sc.next_token(tok)) {
    if (tok == "name") {
      if (!sc.next_token(name)) sc.fail("missing algebra name");
    } else if (tok == "size") {
      if (!sc.next_token(tok)) sc.fail("missing size value");
      size = parse_int(sc, tok, "size");
      if (size < 1) sc.fail("size must be positive");
      if (size > 255) sc.fail("size above 255 is not supported");
    } else if (tok == "op") {
      if (size < 0) sc.fail("'op' before 'size'");
      std::string sym;
      if (!sc.next_token(sym)) sc.fail("missing operation symbol");
      if (!sc.next_token(tok)) sc.fail("missing arity for '" + sym + "'");
      int arity = parse_int(sc, tok, "arity of '" + sym + "'");
      if (arity < 0) sc.fail("negative arity for '" + sym + "'");
      for (const OpSym& s : syms) {
        if (s.name == sym) sc.fail("duplicate operation symbol '" + sym + "'");
      }
      std::size_t want = table_length(size, arity);
      std::vector<int> table;
      table.reserve(want);
      while (table.size() < want) {
        if (!sc.next_token(tok)) {
          sc.fail("table for operation '" + sym + "' has " +
                  std::to_string(table.size()) + " entries, expected " +
                  std::to_string(want));
        }
        if (tok == "op" || tok == "name" || tok == "size") {
          sc.fail("table for operation '" + sym + "' has " +
                  std::to_string(table.size()) + " entries, expected " +
                  std::to_string(want));
        }
        int v = parse_int(sc, tok, "table entry of '" + sym + "'");
        if (v < 0 || v >= size) {
          sc.fail("table entry " + std::to_string(v) + " out of range [0, " +
                  std::to_string(size - 1) + "] for operation '" + sym + "'");
        }
        table.push_back(v);
      }
      syms.push_back({sym, arity});
      tables.push_back(std::move(table));
    } else {
      sc.fail("unexpected token '" + tok + "'");
    }
  }
  if (name.empty()) throw parse_error(source, sc.line_no, "missing 'name'");
  if (size < 0) throw parse_error(source, sc.line_no, "missing 'size'");
  try {
    return FiniteAlgebra(name, size, Signature(std::move(syms)),
                         std::move(tables));
  } catch (const std::invalid_argument& e) {
    throw parse_error(source, sc.line_no, e.what());
  }
}

FiniteAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str(), path);
}

std::string serialize_algebra(const FiniteAlgebra& alg) {
  std::ostringstream out;
  out << "name " << alg.name() << "\n";
  out << "size " << alg.size() << "\n";
  for (int op = 0; op < alg.num_ops(); ++op) {
    const OpSym& s = alg.sig().at(op);
    out << "op " << s.name << " " << s.arity << "\n";
    const std::vector<int>& table = alg.table(op);
    // one row of k entries per line for readability
    std::size_t per_line = s.arity >= 1 ? static_cast<std::size_t>(alg.size()) : 1;
    for (std::size_t i = 0; i < table.size(); ++i) {
      out << table[i];
      out << ((i % per_line == per_line - 1 || i + 1 == table.size()) ? "\n" : " ");
    }
  }
  return out.str();
}

}  // namespace permut
