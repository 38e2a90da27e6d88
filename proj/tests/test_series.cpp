#include <doctest.h>

#include <random>

#include "gw/series.hpp"

using gw::Poly;
using gw::Rational;
using gw::Series;

namespace {

Series t_to_order(long order) {
  return Series::from_poly(Poly({Rational(0), Rational(1)}), order);
}

}  // namespace

TEST_CASE("exponential coefficients") {
  const Series e = series_exp(t_to_order(3));
  CHECK(e.coeff(0) == Rational(1));
  CHECK(e.coeff(1) == Rational(1));
  CHECK(e.coeff(2) == Rational(1, 2));
  CHECK(e.coeff(3) == Rational(1, 6));
}

TEST_CASE("log of one is zero, exp/log round trips") {
  CHECK(series_log(Series::one(4)) == Series(4));
  const Series one_plus_t = Series::from_poly(Poly({Rational(1), Rational(1)}), 5);
  CHECK(series_exp(series_log(one_plus_t)) == one_plus_t);

  std::mt19937 rng(3);
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  for (long order = 1; order <= 12; ++order) {
    Series s(order);
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
    for (long k = 1; k <= order; ++k) c[static_cast<size_t>(k)] = Rational(coeff(rng), den(rng));
    s = Series(order, c);
    CHECK(series_log(series_exp(s)) == s);
    c[0] = Rational(1);
    const Series u(order, c);
    CHECK(series_exp(series_log(u)) == u);
  }
}

TEST_CASE("constant-term preconditions are enforced") {
  CHECK_THROWS_AS(series_exp(Series::one(3)), std::invalid_argument);
  CHECK_THROWS_AS(series_log(Series(3)), std::invalid_argument);
  CHECK_THROWS_AS(Series(3).inverse(), std::invalid_argument);
  CHECK_THROWS_AS(series_div(Series::one(3), Series(3)), std::invalid_argument);
}

TEST_CASE("division examples") {
  const Series one = Series::one(3);
  const Series geom = series_div(one, Series::from_poly(Poly({Rational(1), Rational(-1)}), 3));
  CHECK(geom == Series(3, {Rational(1), Rational(1), Rational(1), Rational(1)}));

  const Series num = Series::from_poly(Poly({Rational(1), Rational(-1), Rational(1)}), 4);
  const Series den = Series::from_poly(Poly({Rational(1), Rational(-2), Rational(1)}), 4);
  CHECK(series_div(num, den) ==
        Series(4, {Rational(1), Rational(1), Rational(2), Rational(3), Rational(4)}));

  const Series p = Series::from_poly(Poly({Rational(1), Rational(5)}), 6);
  CHECK(series_div(p, p) == Series::one(6));
}

TEST_CASE("mixing truncation orders keeps the smaller order") {
  const Series a = Series::one(5);
  const Series b = Series::one(3);
  CHECK((a * b).order() == 3);
  CHECK((a + b).order() == 3);
  CHECK(series_div(a, b).order() == 3);
}

TEST_CASE("rendering omits zero terms") {
  CHECK(Series(4, {Rational(1), Rational(0), Rational(1), Rational(1), Rational(1)}).str() ==
        "1 + t^2 + t^3 + t^4");
  CHECK(Series(2).str() == "0");
}
