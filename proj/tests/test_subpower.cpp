#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "permut/errors.hpp"
#include "permut/subpower.hpp"
#include "permut/term.hpp"

using namespace permut;
using namespace permut::testing;


TEST_CASE("power algebra applies coordinatewise") {
  FiniteAlgebra g = group2();
  PowerAlgebra power(g, 3);
  std::vector<std::vector<uint8_t>> args = {{0, 1, 1}, {1, 1, 0}};
  CHECK(power.apply(0, args) == std::vector<uint8_t>{1, 0, 1});
  CHECK(power.apply(2, {}) == std::vector<uint8_t>{0, 0, 0});

  SUBCASE("an index set of size 1 behaves like the algebra itself") {
    PowerAlgebra p1(g, 1);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        std::vector<std::vector<uint8_t>> pair = {{static_cast<uint8_t>(a)},
                                                  {static_cast<uint8_t>(b)}};
        CHECK(p1.apply(0, pair)[0] == g.apply(0, std::vector<int>{a, b}));
      }
    }
  }
  SUBCASE("(0,1) + (1,1) = (1,0) in the size-2 power") {
    PowerAlgebra p2(g, 2);
    std::vector<std::vector<uint8_t>> pair = {{0, 1}, {1, 1}};
    CHECK(p2.apply(0, pair) == std::vector<uint8_t>{1, 0});
  }
}

TEST_CASE("closure with an empty signature is the generator set") {
  FiniteAlgebra e = empty2();
  PowerAlgebra power(e, 3);
  std::vector<std::vector<uint8_t>> gens = {{0, 1, 0}, {1, 1, 1}};
  SubpowerClosure c = SubpowerClosure::generate(power, gens);
  CHECK(c.size() == 2);
  CHECK(c.coords(0) == gens[0]);
  CHECK(c.coords(1) == gens[1]);
}

TEST_CASE("closure of three restricted projections in a group power") {
  FiniteAlgebra g = group2();
  // D of size 4: four triples, the generators are the projections restricted
  // to those coordinates
  std::vector<std::array<int, 3>> d = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  PowerAlgebra power(g, 4);
  std::vector<std::vector<uint8_t>> gens(3, std::vector<uint8_t>(4));
  for (int which = 0; which < 3; ++which) {
    for (int i = 0; i < 4; ++i) {
      gens[which][i] = static_cast<uint8_t>(d[i][which]);
    }
  }
  SubpowerClosure c = SubpowerClosure::generate(power, gens);

  SUBCASE("size equals the independent fixpoint recomputation") {
    auto oracle = closure_oracle(power, gens);
    CHECK(c.size() == oracle.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(oracle.count(c.coords(i)) == 1);
    }
  }
  SUBCASE("closure contains the generators") {
    for (const auto& gen : gens) CHECK(c.find(gen) >= 0);
  }
  SUBCASE("closed under all operations") {
    for (int op = 0; op < g.num_ops(); ++op) {
      int arity = g.sig().at(op).arity;
      std::vector<std::size_t> idx(arity, 0);
      while (true) {
        std::vector<std::vector<uint8_t>> args;
        for (int j = 0; j < arity; ++j) args.push_back(c.coords(idx[j]));
        CHECK(c.find(power.apply(op, args)) >= 0);
        int j = arity - 1;
        for (; j >= 0; --j) {
          if (++idx[j] < c.size()) break;
          idx[j] = 0;
        }
        if (j < 0) break;
      }
    }
  }
  SUBCASE("idempotent: closing the closure adds nothing") {
    std::vector<std::vector<uint8_t>> all;
    for (std::size_t i = 0; i < c.size(); ++i) all.push_back(c.coords(i));
    SubpowerClosure again = SubpowerClosure::generate(power, all);
    CHECK(again.size() == c.size());
  }
  SUBCASE("provenance re-evaluates to the element, coordinatewise") {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Term t = c.term_of(i);
      for (int coord = 0; coord < 4; ++coord) {
        Assignment a = {static_cast<int>(gens[0][coord]),
                        static_cast<int>(gens[1][coord]),
                        static_cast<int>(gens[2][coord])};
        CHECK(eval_term(g, t, a) == c.coords(i)[coord]);
      }
    }
  }
}

TEST_CASE("closure provenance on z4 power") {
  FiniteAlgebra z = z4();
  PowerAlgebra power(z, 2);
  std::vector<std::vector<uint8_t>> gens = {{1, 2}, {3, 0}};
  SubpowerClosure c = SubpowerClosure::generate(power, gens);

  auto oracle = closure_oracle(power, gens);
  CHECK(c.size() == oracle.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    Term t = c.term_of(i);
    for (int coord = 0; coord < 2; ++coord) {
      Assignment a = {gens[0][coord], gens[1][coord]};
      CHECK(eval_term(z, t, a) == c.coords(i)[coord]);
    }
  }
}

TEST_CASE("duplicate generators keep their first occurrence") {
  FiniteAlgebra e = empty2();
  PowerAlgebra power(e, 2);
  std::vector<std::vector<uint8_t>> gens = {{0, 1}, {0, 1}, {1, 0}};
  SubpowerClosure c = SubpowerClosure::generate(power, gens);
  CHECK(c.size() == 2);
  CHECK(c.term_of(0) == Term::var(0));
}

TEST_CASE("closure budget is a distinct outcome") {
  FiniteAlgebra z = z4();
  PowerAlgebra power(z, 3);
  std::vector<std::vector<uint8_t>> gens = {{0, 1, 2}, {1, 2, 3}, {3, 0, 1}};
  CHECK_THROWS_AS(SubpowerClosure::generate(power, gens, 2), budget_error);
}
