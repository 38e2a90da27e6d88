#pragma once

#include <string>
#include <vector>

#include "gw/poly.hpp"
#include "gw/rational.hpp"

namespace gw {

/*
 * Truncated formal power series: terms t^0 .. t^N are retained, everything
 * above is discarded. Mixing two series of different orders truncates the
 * result to the smaller order.
 */
class Series {
 public:
  explicit Series(long order);
  Series(long order, std::vector<Rational> coeffs);
  static Series from_poly(const Poly& p, long order);
  static Series one(long order);

  long order() const { return static_cast<long>(c_.size()) - 1; }
  Rational coeff(long exponent) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational constant_term() const { return c_[0]; }

  Series truncated(long order) const;
  Poly to_poly() const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Rational& s);
  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  // Multiplicative inverse; requires a nonzero constant term.
  Series inverse() const;

  std::string str(char var = 't') const { return to_poly().str(var); }

 private:
  std::vector<Rational> c_;  // exactly order+1 entries
};

// Formal exponential of a series with constant term 0.
Series series_exp(const Series& s);
// Formal logarithm of a series with constant term 1.
Series series_log(const Series& s);
// num / den to the common truncation order; den needs a nonzero constant term.
Series series_div(const Series& num, const Series& den);

}  // namespace gw
