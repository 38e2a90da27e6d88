#include "gw/combinatorics.hpp"

#include <stdexcept>

namespace gw {

mpz_class factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Rational binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(std::move(b));
}

Rational multi_binom(const std::vector<long>& a, const std::vector<long>& b) {
  Rational result(1);
  const size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    const long ai = i < a.size() ? a[i] : 0;
    const long bi = i < b.size() ? b[i] : 0;
    result *= binom(ai, bi);
    if (result.is_zero()) return result;
  }
  return result;
}

}  // namespace gw
