#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "permut/congruence.hpp"
#include "permut/errors.hpp"
#include "permut/relcheck.hpp"

using namespace permut;
using namespace permut::testing;

TEST_CASE("check_reflexive_char") {
  SUBCASE("diagonal passes for every n") {
    for (int n = 2; n <= 6; ++n) {
      CHECK(check_reflexive_char(group2(), n, BinRel::diagonal(2)));
      CHECK(check_reflexive_char(lattice2(), n, BinRel::diagonal(2)));
    }
  }
  SUBCASE("all compatible reflexive relations of the group pass at n = 2") {
    for (const BinRel& e : enumerate_compatible_reflexive(group2())) {
      CHECK(check_reflexive_char(group2(), 2, e));
    }
  }
  SUBCASE("the lattice order at n = 2: transitive but not an equivalence") {
    BinRel order = BinRel::from_pairs(
        2, std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}});
    // (E, E^op)_1 = E, which is transitive; the symmetry half genuinely fails
    CHECK(check_reflexive_char(lattice2(), 2, order));
    CHECK_FALSE(is_symmetric(alternating(order, opposite(order), 1)));
  }
  SUBCASE("non-reflexive input is rejected") {
    CHECK_THROWS_AS(check_reflexive_char(group2(), 2, BinRel(2)),
                    std::invalid_argument);
  }
}

TEST_CASE("lemma43_check") {
  SUBCASE("equal relations collapse both inclusions") {
    FiniteAlgebra z = z4();
    BinRel r = principal_congruence(z, 0, 2).to_binrel();
    for (int n = 2; n <= 4; ++n) {
      Lemma43Result res = lemma43_check(r, r, n);
      CHECK(res.first_inclusion);
      CHECK(res.second_inclusion);
      CHECK(res.ok());
    }
  }
  SUBCASE("factor congruences of the Klein group at n = 2") {
    FiniteAlgebra k = z2z2();
    BinRel r = Congruence(k, {0, 0, 2, 2}).to_binrel();
    BinRel s = Congruence(k, {0, 1, 0, 1}).to_binrel();
    CHECK(lemma43_check(r, s, 2).ok());
    CHECK(lemma43_check(s, r, 2).ok());
  }
  SUBCASE("first inclusion holds for arbitrary equivalence pairs") {
    std::mt19937 rng(59);
    for (int i = 0; i < 1'000; ++i) {
      int size = 2 + static_cast<int>(rng() % 5);
      BinRel r(size), s(size);
      auto fill = [&](BinRel& rel) {
        std::vector<int> rep = random_partition(size, rng);
        for (int a = 0; a < size; ++a) {
          for (int b = 0; b < size; ++b) {
            if (rep[a] == rep[b]) rel.set(a, b);
          }
        }
      };
      fill(r);
      fill(s);
      int n = 2 + static_cast<int>(rng() % 3);
      CHECK(lemma43_check(r, s, n).first_inclusion);
    }
  }
  SUBCASE("non-equivalence inputs are rejected") {
    BinRel order = BinRel::from_pairs(
        2, std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}});
    CHECK_THROWS_AS(lemma43_check(order, BinRel::diagonal(2), 2),
                    std::invalid_argument);
  }
}

TEST_CASE("enumerate_compatible_reflexive") {
  SUBCASE("group2: exactly the diagonal and the full relation") {
    std::vector<BinRel> rels = enumerate_compatible_reflexive(group2());
    REQUIRE(rels.size() == 2);
    CHECK(rels[0] == BinRel::diagonal(2));
    CHECK(rels[1] == BinRel::full(2));
  }
  SUBCASE("lattice2: diagonal, both orders, full") {
    std::vector<BinRel> rels = enumerate_compatible_reflexive(lattice2());
    CHECK(rels.size() == 4);
  }
  SUBCASE("agrees with compatible_reflexive_closure on random generators") {
    std::mt19937 rng(61);
    for (const FiniteAlgebra& a : {group2(), lattice2(), impl2(), z4()}) {
      std::vector<BinRel> enumerated = enumerate_compatible_reflexive(a);
      for (int i = 0; i < 100; ++i) {
        BinRel gen = random_relation(a.size(), rng);
        BinRel closed = compatible_reflexive_closure(a, gen.pairs());
        bool found = false;
        for (const BinRel& r : enumerated) {
          if (r == closed) found = true;
        }
        CHECK(found);
      }
    }
  }
  SUBCASE("every enumerated relation is reflexive and compatible") {
    for (const FiniteAlgebra& a : {group2(), lattice2(), z4(), z2z2()}) {
      for (const BinRel& r : enumerate_compatible_reflexive(a)) {
        CHECK(is_reflexive(r));
        CHECK(is_compatible(a, r));
      }
    }
  }
  SUBCASE("budget guard for large universes") {
    FiniteAlgebra big("big", 5, Signature{}, {});
    CHECK_THROWS_AS(enumerate_compatible_reflexive(big), budget_error);
  }
}

TEST_CASE("sampled enumeration is seeded and well-formed") {
  std::vector<BinRel> a = sample_compatible_reflexive(z4(), 20, 99);
  std::vector<BinRel> b = sample_compatible_reflexive(z4(), 20, 99);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  for (const BinRel& r : a) {
    CHECK(is_reflexive(r));
    CHECK(is_compatible(z4(), r));
  }
}

TEST_CASE("rts_symmetry_check") {
  SUBCASE("two-element group: everything symmetric") {
    RtsReport report = rts_symmetry_check(group2());
    CHECK(report.all_symmetric());
    CHECK(report.entries.size() == 2);
  }
  SUBCASE("Klein group: everything symmetric") {
    CHECK(rts_symmetry_check(z2z2()).all_symmetric());
  }
  SUBCASE("two-element lattice: the order is a counterexample") {
    RtsReport report = rts_symmetry_check(lattice2());
    CHECK_FALSE(report.all_symmetric());
    BinRel order = BinRel::from_pairs(
        2, std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}});
    bool exhibited = false;
    for (const RtsEntry& e : report.entries) {
      CHECK(is_reflexive(e.rel));
      CHECK(is_transitive(e.rel));
      CHECK(is_compatible(lattice2(), e.rel));
      if (e.rel == order) {
        CHECK_FALSE(e.symmetric);
        exhibited = true;
      }
    }
    CHECK(exhibited);
  }
  SUBCASE("the diagonal is always reported symmetric") {
    for (const FiniteAlgebra& a : {group2(), lattice2(), impl2(), z4()}) {
      RtsReport report = rts_symmetry_check(a);
      bool found = false;
      for (const RtsEntry& e : report.entries) {
        if (e.rel == BinRel::diagonal(a.size())) {
          CHECK(e.symmetric);
          found = true;
        }
      }
      CHECK(found);
    }
  }
}
