#pragma once

#include <gmpxx.h>

#include <vector>

#include "gw/poly.hpp"

namespace gw {

// Square matrix of arbitrary-precision integers (row-major).
class IntMatrix {
 public:
  IntMatrix() = default;  // the 0x0 matrix
  explicit IntMatrix(long n);
  IntMatrix(long n, std::vector<mpz_class> entries);
  static IntMatrix identity(long n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  long size() const { return n_; }
  const mpz_class& at(long i, long j) const { return a_[static_cast<size_t>(i * n_ + j)]; }
  mpz_class& at(long i, long j) { return a_[static_cast<size_t>(i * n_ + j)]; }

  mpz_class trace() const;
  // Exact determinant by fraction-free (Bareiss) elimination; det of the
  // empty matrix is 1.
  mpz_class det() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

 private:
  long n_ = 0;
  std::vector<mpz_class> a_;
};

// det(I - t M) as a polynomial of degree <= size(M) with constant term 1,
// computed exactly by interpolation at the integer points 0..size(M).
Poly det_identity_minus_t(const IntMatrix& m);

}  // namespace gw
