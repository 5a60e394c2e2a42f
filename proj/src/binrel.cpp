#include "permut/binrel.hpp"

#include <bit>
#include <cassert>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "permut/algebra.hpp"
#include "permut/errors.hpp"
#include "permut/subpower.hpp"

namespace permut {

BinRel::BinRel(int size) : size_(size), words_((size + 63) / 64) {
  if (size < 1) throw std::invalid_argument("relation size must be positive");
  bits_.assign(static_cast<std::size_t>(size_) * words_, 0);
}

BinRel BinRel::diagonal(int size) {
  BinRel r(size);
  for (int a = 0; a < size; ++a) r.set(a, a);
  return r;
}

BinRel BinRel::full(int size) {
  BinRel r(size);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) r.set(a, b);
  }
  return r;
}

BinRel BinRel::from_pairs(int size, std::span<const std::pair<int, int>> pairs) {
  BinRel r(size);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= size || b < 0 || b >= size) {
      throw std::invalid_argument("relation pair out of range");
    }
    r.set(a, b);
  }
  return r;
}

bool BinRel::operator==(const BinRel& other) const {
  return size_ == other.size_ && bits_ == other.bits_;
}

std::vector<std::pair<int, int>> BinRel::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b) {
      if (at(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

int BinRel::count() const {
  int n = 0;
  for (uint64_t w : bits_) n += std::popcount(w);
  return n;
}

BinRel opposite(const BinRel& r) {
  BinRel out(r.size());
  for (int a = 0; a < r.size(); ++a) {
    for (int b = 0; b < r.size(); ++b) {
      if (r.at(a, b)) out.set(b, a);
    }
  }
  return out;
}

BinRel compose(const BinRel& r, const BinRel& s) {
  if (r.size() != s.size()) throw std::invalid_argument("relation size mismatch");
  const int k = r.size();
  const int words = r.words();
  BinRel out(k);
  for (int a = 0; a < k; ++a) {
    const uint64_t* ra = r.row(a);
    uint64_t* oa = out.row(a);
    for (int w = 0; w < words; ++w) {
      uint64_t bitsw = ra[w];
      while (bitsw) {
        int b = w * 64 + std::countr_zero(bitsw);
        bitsw &= bitsw - 1;
        const uint64_t* sb = s.row(b);
        for (int v = 0; v < words; ++v) oa[v] |= sb[v];
      }
    }
  }
  return out;
}

BinRel alternating(const BinRel& r, const BinRel& s, int n) {
  if (r.size() != s.size()) throw std::invalid_argument("relation size mismatch");
  if (n < 1) throw std::invalid_argument("alternating length must be >= 1");
  BinRel acc = r;
  for (int step = 2; step <= n; ++step) {
    acc = compose(acc, step % 2 == 1 ? r : s);
  }
  return acc;
}

BinRel rel_power(const BinRel& r, int n) { return alternating(r, r, n); }

bool leq(const BinRel& r, const BinRel& s) {
  if (r.size() != s.size()) throw std::invalid_argument("relation size mismatch");
  for (int a = 0; a < r.size(); ++a) {
    const uint64_t* ra = r.row(a);
    const uint64_t* sa = s.row(a);
    for (int w = 0; w < r.words(); ++w) {
      if (ra[w] & ~sa[w]) return false;
    }
  }
  return true;
}

bool is_reflexive(const BinRel& r) {
  for (int a = 0; a < r.size(); ++a) {
    if (!r.at(a, a)) return false;
  }
  return true;
}

bool is_symmetric(const BinRel& r) { return opposite(r) == r; }

bool is_transitive(const BinRel& r, bool strict) {
  BinRel rr = compose(r, r);
  return strict ? rr == r : leq(rr, r);
}

bool is_equivalence(const BinRel& r) {
  return is_reflexive(r) && is_symmetric(r) && is_transitive(r);
}

bool is_compatible(const FiniteAlgebra& alg, const BinRel& r) {
  if (r.size() != alg.size()) throw std::invalid_argument("size mismatch");
  auto prs = r.pairs();
  std::vector<int> lhs, rhs;
  for (int op = 0; op < alg.num_ops(); ++op) {
    int arity = alg.sig().at(op).arity;
    if (arity == 0) {
      int c = alg.apply(op, {});
      if (!r.at(c, c)) return false;
      continue;
    }
    // all arity-tuples of pairs, odometer order
    std::vector<std::size_t> idx(arity, 0);
    lhs.assign(arity, 0);
    rhs.assign(arity, 0);
    if (prs.empty()) continue;
    while (true) {
      for (int j = 0; j < arity; ++j) {
        lhs[j] = prs[idx[j]].first;
        rhs[j] = prs[idx[j]].second;
      }
      if (!r.at(alg.apply(op, lhs), alg.apply(op, rhs))) return false;
      int j = arity - 1;
      for (; j >= 0; --j) {
        if (++idx[j] < prs.size()) break;
        idx[j] = 0;
      }
      if (j < 0) break;
    }
  }
  return true;
}

BinRel compatible_reflexive_closure(const FiniteAlgebra& alg,
                                    std::span<const std::pair<int, int>> pairs) {
  const int k = alg.size();
  PowerAlgebra square(alg, 2);
  std::vector<std::vector<uint8_t>> gens;
  gens.reserve(k + pairs.size());
  for (int a = 0; a < k; ++a) {
    gens.push_back({static_cast<uint8_t>(a), static_cast<uint8_t>(a)});
  }
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= k || b < 0 || b >= k) {
      throw std::invalid_argument("relation pair out of range");
    }
    gens.push_back({static_cast<uint8_t>(a), static_cast<uint8_t>(b)});
  }
  SubpowerClosure closure = SubpowerClosure::generate(square, gens);
  BinRel out(k);
  for (std::size_t i = 0; i < closure.size(); ++i) {
    const auto& c = closure.coords(i);
    out.set(c[0], c[1]);
  }
  return out;
}

BinRel parse_relation(const std::string& text, int size) {
  BinRel r(size);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    auto read_int = [&](const char* what) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) {
        throw parse_error("relation literal '" + text + "': expected " +
                          std::string(what) + " at column " +
                          std::to_string(pos + 1));
      }
      return std::stoi(text.substr(start, pos - start));
    };
    int a = read_int("an element");
    skip_ws();
    if (pos >= text.size() || text[pos] != ',') {
      throw parse_error("relation literal '" + text + "': expected ',' after " +
                        std::to_string(a));
    }
    ++pos;
    int b = read_int("an element");
    if (a >= size || b >= size) {
      throw parse_error("relation literal '" + text + "': pair (" +
                        std::to_string(a) + "," + std::to_string(b) +
                        ") out of range for size " + std::to_string(size));
    }
    r.set(a, b);
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != ';') {
      throw parse_error("relation literal '" + text +
                        "': expected ';' between pairs");
    }
    ++pos;
    skip_ws();
  }
  return r;
}

std::string format_relation(const BinRel& r) {
  std::ostringstream out;
  bool first = true;
  for (auto [a, b] : r.pairs()) {
    if (!first) out << ";";
    out << a << "," << b;
    first = false;
  }
  return out.str();
}

}  // namespace permut
