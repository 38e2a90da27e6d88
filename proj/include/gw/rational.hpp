#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace gw {

/*
 * Arbitrary-precision rational scalar. Always kept in lowest terms with a
 * positive denominator, so equality is field-by-field comparison and values
 * can serve as ordered map keys. Every operation re-normalizes eagerly.
 */
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(int value) : num_(value), den_(1) {}   // NOLINT
  Rational(mpz_class value) : num_(std::move(value)), den_(1) {}
  Rational(mpz_class numerator, mpz_class denominator);

  // Parses "p" or "p/q" decimal strings (optional leading '-').
  static Rational parse(const std::string& text);

  const mpz_class& num() const { return num_; }
  const mpz_class& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return den_ == 1 && num_ == 1; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }

  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return cmp(a.num_ * b.den_, b.num_ * a.den_) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  void normalize();

  mpz_class num_;
  mpz_class den_;  // > 0
};

Rational pow(Rational base, long exponent);

}  // namespace gw
