#pragma once

#include <vector>

#include "gw/rational.hpp"

namespace gw {

// Target data entering the index formula: the real dimension of the manifold
// and the pairing of the first Chern class of its tangent bundle with the
// curve class.
struct TargetDescriptor {
  long real_dimension = 0;
  long c1_pairing = 0;
};

// 2 c1(TX)A + (dim X - 6)(1 - g) + 2n
long expected_dimension(const TargetDescriptor& target, long genus, long marked_points);

/*
 * Genus-0 integral of psi_1^{a_1} ... psi_n^{a_n} over the n-pointed moduli
 * of stable rational curves, computed by the string-equation recursion from
 * the three-point base case. Returns 0 when the total degree does not match
 * the dimension n-3.
 */
Rational descendant_integral_g0(const std::vector<long>& powers);

// Integral of kappa_a over the (a+3)-pointed genus-0 moduli space, via the
// forgetful-pushforward definition kappa_a = pi_*(psi^{a+1}).
Rational kappa_pure_integral_g0(long a);

// kappa_0 as a number: 2g - 2 + n on any stable (g,n).
long kappa_zero(long genus, long marked_points);

// Integral of psi_1 over the 1-pointed genus-1 moduli space.
Rational psi_one_elliptic();

}  // namespace gw
