#pragma once

#include <gmpxx.h>

#include <vector>

#include "gw/rational.hpp"

namespace gw {

mpz_class factorial(long n);

// C(n,k) with the convention C(n,k) = 0 when k < 0, k > n or n < 0.
Rational binom(long n, long k);

// prod_k C(a_k, b_k), the zero convention as in binom; the shorter sequence
// is padded with zeros.
Rational multi_binom(const std::vector<long>& a, const std::vector<long>& b);

}  // namespace gw
