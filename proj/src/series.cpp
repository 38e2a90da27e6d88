#include "gw/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace gw {

Series::Series(long order) {
  if (order < 0) throw std::invalid_argument("series: negative truncation order");
  c_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

Series::Series(long order, std::vector<Rational> coeffs) : Series(order) {
  const size_t n = std::min(coeffs.size(), c_.size());
  for (size_t i = 0; i < n; ++i) c_[i] = std::move(coeffs[i]);
}

Series Series::from_poly(const Poly& p, long order) {
  Series s(order);
  for (long k = 0; k <= s.order(); ++k) s.c_[static_cast<size_t>(k)] = p.coeff(k);
  return s;
}

Series Series::one(long order) {
  Series s(order);
  s.c_[0] = Rational(1);
  return s;
}

Rational Series::coeff(long exponent) const {
  if (exponent < 0 || exponent > order()) return Rational(0);
  return c_[static_cast<size_t>(exponent)];
}

Series Series::truncated(long order) const {
  Series s(std::min(order, this->order()));
  for (long k = 0; k <= s.order(); ++k) s.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)];
  return s;
}

Poly Series::to_poly() const { return Poly(c_); }

Series operator+(const Series& a, const Series& b) {
  Series s(std::min(a.order(), b.order()));
  for (long k = 0; k <= s.order(); ++k) s.c_[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
  return s;
}

Series operator-(const Series& a, const Series& b) {
  Series s(std::min(a.order(), b.order()));
  for (long k = 0; k <= s.order(); ++k) s.c_[static_cast<size_t>(k)] = a.coeff(k) - b.coeff(k);
  return s;
}

Series operator*(const Series& a, const Series& b) {
  Series s(std::min(a.order(), b.order()));
  for (long i = 0; i <= s.order(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (long j = 0; i + j <= s.order(); ++j) {
      if (b.coeff(j).is_zero()) continue;
      s.c_[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
  }
  return s;
}

Series operator*(const Series& a, const Rational& s) {
  Series r(a.order());
  for (long k = 0; k <= a.order(); ++k) r.c_[static_cast<size_t>(k)] = a.coeff(k) * s;
  return r;
}

Series Series::inverse() const {
  if (c_[0].is_zero())
    throw std::invalid_argument("series: inverse requires nonzero constant term");
  Series r(order());
  const Rational lead = Rational(1) / c_[0];
  r.c_[0] = lead;
  for (long n = 1; n <= order(); ++n) {
    Rational acc(0);
    for (long k = 1; k <= n; ++k) acc += coeff(k) * r.c_[static_cast<size_t>(n - k)];
    r.c_[static_cast<size_t>(n)] = -lead * acc;
  }
  return r;
}

Series series_exp(const Series& s) {
  if (!s.constant_term().is_zero())
    throw std::invalid_argument("series: exp requires constant term 0");
  const long order = s.order();
  std::vector<Rational> y(static_cast<size_t>(order) + 1, Rational(0));
  y[0] = Rational(1);
  // y' = s'y, coefficientwise: n y_n = sum_{k=1..n} k s_k y_{n-k}
  for (long n = 1; n <= order; ++n) {
    Rational acc(0);
    for (long k = 1; k <= n; ++k) acc += s.coeff(k) * Rational(k) * y[static_cast<size_t>(n - k)];
    y[static_cast<size_t>(n)] = acc / Rational(n);
  }
  return Series(order, std::move(y));
}

Series series_log(const Series& s) {
  if (!s.constant_term().is_one())
    throw std::invalid_argument("series: log requires constant term 1");
  const long order = s.order();
  std::vector<Rational> x(static_cast<size_t>(order) + 1, Rational(0));
  // u' = x'u with u_0 = 1: n x_n = n u_n - sum_{k=1..n-1} k x_k u_{n-k}
  for (long n = 1; n <= order; ++n) {
    Rational acc = s.coeff(n) * Rational(n);
    for (long k = 1; k < n; ++k) acc -= Rational(k) * x[static_cast<size_t>(k)] * s.coeff(n - k);
    x[static_cast<size_t>(n)] = acc / Rational(n);
  }
  return Series(order, std::move(x));
}

Series series_div(const Series& num, const Series& den) {
  if (den.constant_term().is_zero())
    throw std::invalid_argument("series: division requires nonzero constant term");
  const long order = std::min(num.order(), den.order());
  return num.truncated(order) * den.truncated(order).inverse();
}

}  // namespace gw
