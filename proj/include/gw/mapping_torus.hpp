#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "gw/int_matrix.hpp"
#include "gw/poly.hpp"
#include "gw/series.hpp"

namespace gw {

/*
 * The action of a diffeomorphism on homology: maps()[k] is the matrix of the
 * induced map on H_k in a chosen basis. Degrees beyond the stored top degree
 * act on the zero group (0x0 matrix).
 */
class HomologyAction {
 public:
  explicit HomologyAction(std::vector<IntMatrix> maps);

  long top_degree() const { return static_cast<long>(maps_.size()) - 1; }
  const IntMatrix& map(long k) const;

 private:
  std::vector<IntMatrix> maps_;
};

struct SectionClassCheck {
  mpz_class determinant;  // det(I - f_*1), sign as computed in the given basis
  bool defined = false;   // |det| == 1
};

// A section class of the mapping torus exists precisely when det(I - f_*1)
// is a unit.
SectionClassCheck section_class_defined(const HomologyAction& action);

// Rational form together with its truncated expansion.
struct GromovSeriesResult {
  Poly numerator;
  Poly denominator;  // constant term 1
  Series expansion;  // numerator/denominator to the truncation order

  // gcd-reduced pair, rescaled so the denominator has constant term 1
  std::pair<Poly, Poly> reduced() const;
};

/*
 * Lefschetz zeta function of the action:
 *   prod_{k odd} det(I - t f_*k) / prod_{k even} det(I - t f_*k).
 * When the section class is defined this is the partial Gromov series of the
 * mapping torus for multiples of that class; the rational function itself
 * exists unconditionally.
 */
GromovSeriesResult lefschetz_zeta(const HomologyAction& action, long order);

// Lefschetz numbers L(f^m) = sum_k (-1)^k tr((f_*k)^m) for m = 1..m_max.
std::vector<mpz_class> lefschetz_numbers(const HomologyAction& action, long m_max);

// det(I - t M) for the monodromy action on first homology of the fiber;
// M must be 2g x 2g. For a fibered knot this is the Alexander polynomial.
Poly alexander_from_monodromy(const IntMatrix& m);

// Gromov series of the knot-surgery 4-manifold fibering over the torus:
// A_K(t) / (1-t)^2.
GromovSeriesResult knot_surgery_series_xk(const IntMatrix& m, long order);

// Full Gromov (= Seiberg-Witten) series of E(n,K) for n >= 2:
// A_K(t) (1-t)^{n-2}, a polynomial.
GromovSeriesResult en_knot_series(const IntMatrix& m, long n, long order);

// Monodromy matrices on H_1 of the fiber for a few fibered knots; the
// unknot's fiber is a disk, so its matrix is empty.
IntMatrix monodromy_unknot();
IntMatrix monodromy_trefoil();      // det(I - tM) = 1 - t + t^2
IntMatrix monodromy_figure_eight();  // det(I - tM) = 1 - 3t + t^2

}  // namespace gw
