#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gw/rational.hpp"

namespace gw {

/*
 * Dense univariate polynomial over Rational, coefficients stored by ascending
 * exponent. Trailing zeros are stripped on construction; the zero polynomial
 * has an empty coefficient list and degree -1.
 */
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

  static Poly constant(Rational value);
  static Poly monomial(Rational coeff, long exponent);
  // 1 - t^k
  static Poly one_minus_power(long k);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  Rational coeff(long exponent) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;

  // Coefficient list mirrored: c_k -> c_{degree-k}.  Used for the
  // reciprocal-polynomial symmetry t^deg p(1/t).
  Poly reversed() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Rational& s);

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Ascending-power rendering with explicit signs, e.g. "1 - 2t + t^2".
  std::string str(char var = 't') const;

 private:
  void strip();

  std::vector<Rational> c_;
};

Poly pow(const Poly& base, long exponent);

// Quotient and remainder of exact polynomial division over the rationals.
std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den);

// Monic greatest common divisor (Euclid); gcd(0,0) = 0.
Poly poly_gcd(Poly a, Poly b);

}  // namespace gw
