#include "gw/rational.hpp"

#include <stdexcept>

namespace gw {

Rational::Rational(mpz_class numerator, mpz_class denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational: empty string");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(text));
    mpz_class p(text.substr(0, slash));
    mpz_class q(text.substr(slash + 1));
    return Rational(std::move(p), std::move(q));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  }
}

std::string Rational::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::invalid_argument("rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

Rational pow(Rational base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw std::invalid_argument("rational: 0 to negative power");
    base = Rational(1) / base;
    exponent = -exponent;
  }
  Rational result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace gw
