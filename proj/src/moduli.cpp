#include "gw/moduli.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gw {

long expected_dimension(const TargetDescriptor& target, long genus, long marked_points) {
  if (target.real_dimension < 2 || target.real_dimension % 2 != 0)
    throw std::invalid_argument("target dimension must be even and >= 2");
  if (genus < 0 || marked_points < 0)
    throw std::invalid_argument("genus and marked points must be nonnegative");
  return 2 * target.c1_pairing + (target.real_dimension - 6) * (1 - genus) + 2 * marked_points;
}

namespace {

Rational descendant_recurse(std::vector<long> powers,
                            std::map<std::vector<long>, Rational>& memo) {
  // canonical: sorted descending, so zeros sit at the back
  std::sort(powers.begin(), powers.end(), std::greater<long>());
  const auto hit = memo.find(powers);
  if (hit != memo.end()) return hit->second;

  const size_t n = powers.size();
  Rational result(0);
  if (n == 3) {
    result = Rational(1);  // all exponents zero here by the degree check
  } else {
    // string equation: drop a zero-exponent point, lower one other exponent
    std::vector<long> rest(powers.begin(), powers.end() - 1);
    for (size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == 0) continue;
      std::vector<long> next = rest;
      --next[i];
      result += descendant_recurse(std::move(next), memo);
    }
  }
  memo.emplace(std::move(powers), result);
  return result;
}

}  // namespace

Rational descendant_integral_g0(const std::vector<long>& powers) {
  const long n = static_cast<long>(powers.size());
  if (n < 3) throw std::invalid_argument("descendant integral needs at least 3 marked points");
  long total = 0;
  for (long a : powers) {
    if (a < 0) throw std::invalid_argument("descendant exponents must be nonnegative");
    total += a;
  }
  if (total != n - 3) return Rational(0);  // degree mismatch is a meaningful zero
  std::map<std::vector<long>, Rational> memo;
  return descendant_recurse(powers, memo);
}

Rational kappa_pure_integral_g0(long a) {
  if (a < 1) throw std::invalid_argument("kappa integral requires a >= 1 (a = 0 is kappa_zero)");
  // On the (a+3)-pointed space, push forward from one extra point:
  // <tau_{a+1} tau_0^{a+3}>.
  std::vector<long> powers(static_cast<size_t>(a) + 4, 0);
  powers[0] = a + 1;
  return descendant_integral_g0(powers);
}

long kappa_zero(long genus, long marked_points) {
  if (genus < 0 || marked_points < 0)
    throw std::invalid_argument("genus and marked points must be nonnegative");
  if (2 * genus - 2 + marked_points <= 0)
    throw std::invalid_argument("kappa_zero requires a stable (g,n)");
  return 2 * genus - 2 + marked_points;
}

Rational psi_one_elliptic() { return Rational(1, 24); }

}  // namespace gw
