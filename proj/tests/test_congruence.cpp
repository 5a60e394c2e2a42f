#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "permut/algebra.hpp"
#include "permut/binrel.hpp"
#include "permut/congruence.hpp"
#include "permut/errors.hpp"

using namespace permut;
using namespace permut::testing;

TEST_CASE("principal congruences") {
  SUBCASE("identifying an element with itself gives the diagonal") {
    FiniteAlgebra z = z4();
    CHECK(principal_congruence(z, 2, 2) == Congruence::diagonal(4));
  }
  SUBCASE("Cg(0,2) on the cyclic group of order 4") {
    FiniteAlgebra z = z4();
    Congruence c = principal_congruence(z, 0, 2);
    CHECK(c.blocks() == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  }
  SUBCASE("Cg(0,1) on the cyclic group of order 4 is full") {
    FiniteAlgebra z = z4();
    CHECK(principal_congruence(z, 0, 1).num_blocks() == 1);
  }
  SUBCASE("results are compatible") {
    for (const FiniteAlgebra& a : {group2(), impl2(), lattice2(), z4(), z2z2()}) {
      for (int x = 0; x < a.size(); ++x) {
        for (int y = 0; y < a.size(); ++y) {
          BinRel r = principal_congruence(a, x, y).to_binrel();
          CHECK(is_compatible(a, r));
          CHECK(is_equivalence(r));
          CHECK(r.at(x, y));
        }
      }
    }
  }
}

TEST_CASE("all_congruences") {
  SUBCASE("two-element algebras have at most diagonal and full") {
    for (const FiniteAlgebra& a : {group2(), impl2(), lattice2(), empty2()}) {
      for (const Congruence& c : all_congruences(a)) {
        CHECK((c.num_blocks() == 1 || c.num_blocks() == 2));
      }
    }
    // no operations: both partitions of a 2-element set are congruences
    CHECK(all_congruences(empty2()).size() == 2);
  }

  SUBCASE("cyclic group of order 4 has exactly 3, matching the partition oracle") {
    FiniteAlgebra z = z4();
    std::vector<Congruence> cons = all_congruences(z);
    CHECK(cons.size() == 3);

    // oracle: all 15 partitions of a 4-element set, filtered by compatibility
    int oracle_count = 0;
    for (const std::vector<int>& rep : all_partitions(4)) {
      BinRel r(4);
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          if (rep[a] == rep[b]) r.set(a, b);
        }
      }
      if (is_compatible(z, r)) {
        ++oracle_count;
        bool found = std::any_of(cons.begin(), cons.end(),
                                 [&](const Congruence& c) {
                                   return c.rep_array() == rep;
                                 });
        CHECK(found);
      }
    }
    CHECK(oracle_count == 3);
  }

  SUBCASE("deterministic order: finest first, coarsest last") {
    std::vector<Congruence> cons = all_congruences(z4());
    CHECK(cons.front() == Congruence::diagonal(4));
    CHECK(cons.back().num_blocks() == 1);
    for (std::size_t i = 1; i < cons.size(); ++i) {
      CHECK(cons[i - 1].num_blocks() >= cons[i].num_blocks());
    }
  }

  SUBCASE("every output is a compatible equivalence") {
    for (const FiniteAlgebra& a : {z4(), z2z2(), impl2()}) {
      for (const Congruence& c : all_congruences(a)) {
        BinRel r = c.to_binrel();
        CHECK(is_compatible(a, r));
        CHECK(is_equivalence(r));
      }
    }
  }

  SUBCASE("constructing an incompatible partition throws") {
    // {0,1},{2},{3} is not a congruence of z4: 0~1 forces everything
    CHECK_THROWS_AS(Congruence(z4(), {0, 0, 2, 3}), std::invalid_argument);
  }
}

TEST_CASE("permutability degree") {
  SUBCASE("equal congruences have degree 1") {
    FiniteAlgebra z = z4();
    Congruence c = principal_congruence(z, 0, 2);
    CHECK(permutability_degree(c, c) == 1);
  }

  SUBCASE("factor congruences of the Klein group have degree 2") {
    FiniteAlgebra k = z2z2();
    // kernels of the two projections: blocks {0,1},{2,3} and {0,2},{1,3}
    Congruence r(k, {0, 0, 2, 2});
    Congruence s(k, {0, 1, 0, 1});
    CHECK(permutability_degree(r, s) == 2);
    // their composite in either order is everything
    CHECK(compose(r.to_binrel(), s.to_binrel()) == BinRel::full(4));
    CHECK(compose(s.to_binrel(), r.to_binrel()) == BinRel::full(4));
  }

  SUBCASE("degree 3 appears inside the square of the implication algebra") {
    // the square itself has only the factor congruences, which permute; the
    // three-element subalgebra {(0,1),(1,0),(1,1)} of the square carries a
    // genuinely non-permuting pair
    FiniteAlgebra t3 = tarski3();
    std::vector<Congruence> cons = all_congruences(t3);
    int max_deg = 1;
    bool saw_noncommuting = false;
    for (std::size_t i = 0; i < cons.size(); ++i) {
      for (std::size_t j = i + 1; j < cons.size(); ++j) {
        auto deg = permutability_degree(cons[i], cons[j]);
        REQUIRE(deg.has_value());
        max_deg = std::max(max_deg, *deg);
        BinRel rb = cons[i].to_binrel(), sb = cons[j].to_binrel();
        if (compose(rb, sb) != compose(sb, rb)) {
          saw_noncommuting = true;
          CHECK(*deg == 3);
          // the degree-3 equality, by the matrix oracle
          CHECK(alternating(rb, sb, 3) == alternating(sb, rb, 3));
          CHECK(alternating_oracle(rb, sb, 3) == alternating_oracle(sb, rb, 3));
        }
      }
    }
    CHECK(saw_noncommuting);
    CHECK(max_deg == 3);
  }

  SUBCASE("the square itself has permuting congruences") {
    FiniteAlgebra sq = direct_power(impl2(), 2);
    std::vector<Congruence> cons = all_congruences(sq);
    CHECK(cons.size() == 4);  // diagonal, two factor kernels, full
    for (const Congruence& r : cons) {
      for (const Congruence& s : cons) {
        auto deg = permutability_degree(r, s);
        REQUIRE(deg.has_value());
        CHECK(*deg <= 2);
      }
    }
  }

  SUBCASE("degree is symmetric in its arguments") {
    for (const FiniteAlgebra& a :
         {z4(), z2z2(), direct_power(impl2(), 2), tarski3()}) {
      std::vector<Congruence> cons = all_congruences(a);
      for (const Congruence& r : cons) {
        for (const Congruence& s : cons) {
          CHECK(permutability_degree(r, s) == permutability_degree(s, r));
        }
      }
    }
  }

  SUBCASE("alternating composites grow monotonically for congruence pairs") {
    FiniteAlgebra t3 = tarski3();
    std::vector<Congruence> cons = all_congruences(t3);
    for (const Congruence& r : cons) {
      for (const Congruence& s : cons) {
        BinRel rb = r.to_binrel(), sb = s.to_binrel();
        for (int n = 1; n <= 4; ++n) {
          CHECK(leq(alternating(rb, sb, n), alternating(rb, sb, n + 1)));
        }
      }
    }
  }

  SUBCASE("bounded search reports none") {
    // order-like distinct congruences still permute eventually; build a case
    // where the bound cuts the search short instead
    FiniteAlgebra z = z4();
    Congruence r = principal_congruence(z, 0, 2);
    Congruence s = Congruence::diagonal(4);
    CHECK(permutability_degree(r, s, 1) == std::nullopt);
    CHECK(permutability_degree(r, s, 2) == 2);
  }
}

TEST_CASE("algebra_permutability") {
  SUBCASE("trivial congruence lattices are 2-permutable") {
    CHECK(algebra_permutability(group2(), 2));
    CHECK(algebra_permutability(impl2(), 2));  // only diagonal and full
  }
  SUBCASE("cyclic group of order 4 at n = 2") {
    CHECK(algebra_permutability(z4(), 2));
  }
  SUBCASE("the three-element Tarski algebra needs n = 3") {
    FiniteAlgebra t3 = tarski3();
    CHECK_FALSE(algebra_permutability(t3, 2));
    CHECK(algebra_permutability(t3, 3));
    // the full square is 2-permutable at the algebra level
    CHECK(algebra_permutability(direct_power(impl2(), 2), 2));
  }
}
