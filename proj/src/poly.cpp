#include "gw/poly.hpp"

#include <stdexcept>

namespace gw {

void Poly::strip() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(Rational value) {
  Poly p;
  if (!value.is_zero()) p.c_.push_back(std::move(value));
  return p;
}

Poly Poly::monomial(Rational coeff, long exponent) {
  if (exponent < 0) throw std::invalid_argument("poly: negative exponent");
  Poly p;
  if (coeff.is_zero()) return p;
  p.c_.assign(static_cast<size_t>(exponent) + 1, Rational(0));
  p.c_.back() = std::move(coeff);
  return p;
}

Poly Poly::one_minus_power(long k) {
  Poly p = monomial(Rational(-1), k);
  return p += constant(Rational(1));
}

Rational Poly::coeff(long exponent) const {
  if (exponent < 0 || exponent >= static_cast<long>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(exponent)];
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::reversed() const {
  std::vector<Rational> rev(c_.rbegin(), c_.rend());
  return Poly(std::move(rev));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  strip();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  strip();
  return *this;
}

Poly operator-(const Poly& a) {
  std::vector<Rational> c;
  c.reserve(a.c_.size());
  for (const auto& x : a.c_) c.push_back(-x);
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Rational& s) {
  std::vector<Rational> c;
  c.reserve(a.c_.size());
  for (const auto& x : a.c_) c.push_back(x * s);
  return Poly(std::move(c));
}

Poly pow(const Poly& base, long exponent) {
  if (exponent < 0) throw std::invalid_argument("poly: negative power");
  Poly result = Poly::constant(Rational(1));
  Poly b = base;
  while (exponent > 0) {
    if (exponent & 1) result = result * b;
    b = b * b;
    exponent >>= 1;
  }
  return result;
}

std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::invalid_argument("poly: division by zero polynomial");
  Poly rem = num;
  std::vector<Rational> q;
  const long dd = den.degree();
  if (rem.degree() >= dd) q.assign(static_cast<size_t>(rem.degree() - dd) + 1, Rational(0));
  const Rational lead = den.coeff(dd);
  while (!rem.is_zero() && rem.degree() >= dd) {
    const long shift = rem.degree() - dd;
    const Rational factor = rem.coeff(rem.degree()) / lead;
    q[static_cast<size_t>(shift)] = factor;
    rem -= Poly::monomial(factor, shift) * den;
  }
  return {Poly(std::move(q)), rem};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const Rational lead = a.coeff(a.degree());
  return a * (Rational(1) / lead);
}

std::string Poly::str(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    const bool neg = c.is_negative();
    const Rational mag = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = mag.is_one();
    if (k == 0) {
      out += mag.str();
    } else {
      if (!unit) {
        if (mag.is_integer()) {
          out += mag.str();
        } else {
          out += "(" + mag.str() + ")";
        }
      }
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace gw
