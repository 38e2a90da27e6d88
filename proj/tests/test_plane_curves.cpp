#include <doctest.h>

#include "gw/plane_curves.hpp"
#include "oracles.hpp"

using gw::bryan_leung_series;
using gw::kontsevich_nd;
using gw::Rational;
using gw::severi_by_nodes;
using gw::severi_general;
using gw::SeveriEngine;
using gw::SeveriKey;
using gw::Tangency;

TEST_CASE("tangency bookkeeping") {
  const Tangency t({2, 0, 1});
  CHECK(t.total_points() == 3);
  CHECK(t.total_contact() == 5);
  CHECK(t.count_at(3) == 1);
  CHECK(t.count_at(7) == 0);
  CHECK(Tangency({1, 0, 0}) == Tangency({1}));
  CHECK(t.with_added(2).count_at(2) == 1);
  CHECK(t.with_removed(1).total_points() == 2);
  CHECK_THROWS_AS(Tangency({-1}), std::invalid_argument);
  CHECK_THROWS_AS(t.with_removed(2), std::invalid_argument);
}

TEST_CASE("rational curve counts") {
  CHECK(kontsevich_nd(1) == Rational(1));
  CHECK(kontsevich_nd(2) == Rational(1));
  CHECK(kontsevich_nd(3) == Rational(12));
  CHECK(kontsevich_nd(4) == Rational(620));
  CHECK(kontsevich_nd(5) == Rational(87304));
  CHECK_THROWS_AS(kontsevich_nd(0), std::invalid_argument);
}

TEST_CASE("generalized Severi degrees: stated values") {
  CHECK(severi_general({1, 0, Tangency(), Tangency::simple_points(1)}) == Rational(1));
  CHECK(severi_general({1, 0, Tangency::simple_points(1), Tangency()}) == Rational(1));
  CHECK(severi_general({3, 0, Tangency(), Tangency::simple_points(3)}) == Rational(12));
  CHECK(severi_general({4, 2, Tangency(), Tangency::simple_points(4)}) == Rational(27));
  CHECK(severi_general({4, 1, Tangency(), Tangency::simple_points(4)}) == Rational(225));
}

TEST_CASE("out-of-range genus and broken contact totals give zero") {
  CHECK(severi_general({3, 5, Tangency(), Tangency::simple_points(3)}) == Rational(0));
  CHECK(severi_general({3, -1, Tangency(), Tangency::simple_points(3)}) == Rational(0));
  CHECK(severi_general({3, 0, Tangency(), Tangency::simple_points(2)}) == Rational(0));
}

TEST_CASE("node-indexed Severi degrees") {
  CHECK(severi_by_nodes(3, 1) == Rational(12));
  CHECK(severi_by_nodes(5, 1) == Rational(48));
  CHECK(severi_by_nodes(4, 0) == Rational(1));  // the unique smooth quartic
  CHECK_THROWS_AS(severi_by_nodes(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(severi_by_nodes(4, -1), std::invalid_argument);
  for (long d = 3; d <= 6; ++d) CHECK(severi_by_nodes(d, 1) == gw::testing::one_node_oracle(d));
  for (long d = 4; d <= 6; ++d) CHECK(severi_by_nodes(d, 2) == gw::testing::two_node_oracle(d));
}

TEST_CASE("the two recursions count the same rational curves") {
  for (long d = 1; d <= 5; ++d) {
    CHECK(severi_general({d, 0, Tangency(), Tangency::simple_points(d)}) == kontsevich_nd(d));
  }
}

TEST_CASE("classical tangential values") {
  SeveriEngine e;
  // conics through four points tangent to the line
  CHECK(e.irreducible(2, 0, Tangency(), Tangency::single(2)) == Rational(2));
  // conics tangent at a fixed point of the line
  CHECK(e.irreducible(2, 0, Tangency::single(2), Tangency()) == Rational(1));
  // cubics with all three line crossings at fixed points
  CHECK(e.irreducible(3, 0, Tangency::simple_points(3), Tangency()) == Rational(10));
}

TEST_CASE("the recursion's native counts include reducible curves") {
  SeveriEngine e;
  // pairs of lines through four points, split 2+2
  CHECK(e.reduced(2, -1, Tangency(), Tangency::simple_points(2)) == Rational(3));
  // line + nodal cubic assemblies enlarge the reduced quartic count
  CHECK(e.reduced(4, 0, Tangency(), Tangency::simple_points(4)) == Rational(675));
  CHECK(e.irreducible(4, 0, Tangency(), Tangency::simple_points(4)) == Rational(620));
}

TEST_CASE("memoization is sound across cold and warm caches") {
  SeveriEngine warm;
  const SeveriKey key{5, 2, Tangency(), Tangency::simple_points(5)};
  const Rational first = warm.irreducible(key.degree, key.genus, key.alpha, key.beta);
  const Rational second = warm.irreducible(key.degree, key.genus, key.alpha, key.beta);
  CHECK(first == second);
  CHECK(severi_general(key) == first);  // fresh engine, cold cache
}

TEST_CASE("all Severi outputs are nonnegative integers") {
  SeveriEngine e;
  for (long d = 1; d <= 5; ++d)
    for (long g = 0; g <= (d - 1) * (d - 2) / 2; ++g) {
      const Rational v = e.irreducible(d, g, Tangency(), Tangency::simple_points(d));
      CHECK(v.is_integer());
      CHECK(!v.is_negative());
    }
}

TEST_CASE("section-class series of the rational elliptic surface") {
  const auto s = bryan_leung_series(10);
  CHECK(s.coeff(0) == Rational(1));
  CHECK(s.coeff(1) == Rational(12));
  CHECK(s.coeff(3) == Rational(520));
  for (long m = 0; m <= 10; ++m) {
    CHECK(s.coeff(m) == Rational(gw::testing::colored_partition_count(m)));
    CHECK(s.coeff(m).is_integer());
    CHECK(s.coeff(m) > Rational(0));
  }
  CHECK(bryan_leung_series(0) == gw::Series::one(0));
  CHECK_THROWS_AS(bryan_leung_series(-1), std::invalid_argument);
}
