#include <doctest.h>

#include <random>

#include "gw/combinatorics.hpp"

using gw::binom;
using gw::multi_binom;
using gw::Rational;

TEST_CASE("binomials with the zero convention") {
  CHECK(binom(5, 2) == Rational(10));
  CHECK(binom(3, 5) == Rational(0));
  CHECK(binom(5, 1) == Rational(5));  // C(3d-4, 3d1-2) at d=3, d1=1
  CHECK(binom(-1, 0) == Rational(0));
  CHECK(binom(4, -1) == Rational(0));
  CHECK(binom(0, 0) == Rational(1));
  CHECK(binom(40, 20) == Rational::parse("137846528820"));
}

TEST_CASE("multi-binomials") {
  CHECK(multi_binom({2, 1}, {1, 1}) == Rational(2));
  CHECK(multi_binom({0}, {0}) == Rational(1));
  CHECK(multi_binom({3}, {4}) == Rational(0));
  CHECK(multi_binom({}, {}) == Rational(1));
  CHECK(multi_binom({2, 1}, {1}) == Rational(2));  // shorter side padded with zeros
  CHECK(multi_binom({2}, {1, 1}) == Rational(0));
}

TEST_CASE("choosing everything is one way") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> len(0, 5);
  std::uniform_int_distribution<long> entry(0, 6);
  for (int i = 0; i < 50; ++i) {
    std::vector<long> a(static_cast<size_t>(len(rng)));
    for (auto& v : a) v = entry(rng);
    CHECK(multi_binom(a, a) == Rational(1));
  }
}

TEST_CASE("factorial") {
  CHECK(gw::factorial(0) == 1);
  CHECK(gw::factorial(5) == 120);
  CHECK_THROWS_AS(gw::factorial(-1), std::invalid_argument);
}
