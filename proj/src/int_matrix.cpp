#include "gw/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace gw {

IntMatrix::IntMatrix(long n) : n_(n) {
  if (n < 0) throw std::invalid_argument("matrix: negative size");
  a_.assign(static_cast<size_t>(n * n), mpz_class(0));
}

IntMatrix::IntMatrix(long n, std::vector<mpz_class> entries) : n_(n), a_(std::move(entries)) {
  if (n < 0 || a_.size() != static_cast<size_t>(n * n))
    throw std::invalid_argument("matrix: entry count does not match size");
}

IntMatrix IntMatrix::identity(long n) {
  IntMatrix m(n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const long n = static_cast<long>(rows.size());
  IntMatrix m(n);
  for (long i = 0; i < n; ++i) {
    if (static_cast<long>(rows[static_cast<size_t>(i)].size()) != n)
      throw std::invalid_argument("matrix: ragged rows");
    for (long j = 0; j < n; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

mpz_class IntMatrix::trace() const {
  mpz_class t = 0;
  for (long i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

mpz_class IntMatrix::det() const {
  if (n_ == 0) return 1;
  IntMatrix w = *this;
  mpz_class prev = 1;
  int sign = 1;
  for (long k = 0; k < n_ - 1; ++k) {
    if (w.at(k, k) == 0) {
      long pivot = -1;
      for (long i = k + 1; i < n_; ++i) {
        if (w.at(i, k) != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return 0;
      for (long j = 0; j < n_; ++j) std::swap(w.at(k, j), w.at(pivot, j));
      sign = -sign;
    }
    for (long i = k + 1; i < n_; ++i) {
      for (long j = k + 1; j < n_; ++j) {
        mpz_class v = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(w.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  mpz_class d = w.at(n_ - 1, n_ - 1);
  return sign < 0 ? mpz_class(-d) : d;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix: size mismatch");
  IntMatrix c(a.n_);
  for (long i = 0; i < a.n_; ++i)
    for (long k = 0; k < a.n_; ++k) {
      if (a.at(i, k) == 0) continue;
      for (long j = 0; j < a.n_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

Poly det_identity_minus_t(const IntMatrix& m) {
  const long n = m.size();
  if (n == 0) return Poly::constant(Rational(1));
  // Values of det(I - jM) at j = 0..n, then Lagrange interpolation.
  std::vector<mpz_class> values;
  values.reserve(static_cast<size_t>(n) + 1);
  for (long j = 0; j <= n; ++j) {
    IntMatrix s = IntMatrix::identity(n);
    for (long r = 0; r < n; ++r)
      for (long c = 0; c < n; ++c) s.at(r, c) -= mpz_class(j) * m.at(r, c);
    values.push_back(s.det());
  }
  Poly result;
  for (long j = 0; j <= n; ++j) {
    Poly basis = Poly::constant(Rational(1));
    Rational denom(1);
    for (long i = 0; i <= n; ++i) {
      if (i == j) continue;
      basis = basis * Poly({Rational(-i), Rational(1)});
      denom *= Rational(j - i);
    }
    result += basis * (Rational(values[static_cast<size_t>(j)]) / denom);
  }
  return result;
}

}  // namespace gw
