#include "gw/mapping_torus.hpp"

#include <stdexcept>

namespace gw {

HomologyAction::HomologyAction(std::vector<IntMatrix> maps) : maps_(std::move(maps)) {
  if (maps_.empty()) throw std::invalid_argument("homology action: needs at least degree 0");
}

const IntMatrix& HomologyAction::map(long k) const {
  static const IntMatrix empty;
  if (k < 0 || k > top_degree()) return empty;
  return maps_[static_cast<size_t>(k)];
}

SectionClassCheck section_class_defined(const HomologyAction& action) {
  const IntMatrix& f1 = action.map(1);
  IntMatrix s = IntMatrix::identity(f1.size());
  for (long i = 0; i < f1.size(); ++i)
    for (long j = 0; j < f1.size(); ++j) s.at(i, j) -= f1.at(i, j);
  SectionClassCheck check;
  check.determinant = s.det();
  check.defined = check.determinant == 1 || check.determinant == -1;
  return check;
}

std::pair<Poly, Poly> GromovSeriesResult::reduced() const {
  if (numerator.is_zero()) return {Poly(), Poly::constant(Rational(1))};
  const Poly g = poly_gcd(numerator, denominator);
  Poly num = poly_divmod(numerator, g).first;
  Poly den = poly_divmod(denominator, g).first;
  const Rational c0 = den.coeff(0);
  if (c0.is_zero()) throw std::logic_error("reduced denominator lost its unit constant term");
  const Rational scale = Rational(1) / c0;
  return {num * scale, den * scale};
}

namespace {

GromovSeriesResult make_result(Poly num, Poly den, long order) {
  if (order < 0) throw std::invalid_argument("series result: negative expansion order");
  GromovSeriesResult r{std::move(num), std::move(den), Series(order)};
  r.expansion = series_div(Series::from_poly(r.numerator, order),
                           Series::from_poly(r.denominator, order));
  return r;
}

}  // namespace

GromovSeriesResult lefschetz_zeta(const HomologyAction& action, long order) {
  Poly num = Poly::constant(Rational(1));
  Poly den = Poly::constant(Rational(1));
  for (long k = 0; k <= action.top_degree(); ++k) {
    const Poly factor = det_identity_minus_t(action.map(k));
    if (k % 2 == 1)
      num = num * factor;
    else
      den = den * factor;
  }
  return make_result(std::move(num), std::move(den), order);
}

std::vector<mpz_class> lefschetz_numbers(const HomologyAction& action, long m_max) {
  if (m_max < 1) throw std::invalid_argument("lefschetz numbers: m_max must be >= 1");
  std::vector<mpz_class> numbers(static_cast<size_t>(m_max), mpz_class(0));
  for (long k = 0; k <= action.top_degree(); ++k) {
    const IntMatrix& f = action.map(k);
    if (f.size() == 0) continue;
    IntMatrix p = f;
    for (long m = 1; m <= m_max; ++m) {
      if (k % 2 == 0)
        numbers[static_cast<size_t>(m - 1)] += p.trace();
      else
        numbers[static_cast<size_t>(m - 1)] -= p.trace();
      if (m < m_max) p = p * f;
    }
  }
  return numbers;
}

Poly alexander_from_monodromy(const IntMatrix& m) {
  if (m.size() % 2 != 0)
    throw std::invalid_argument("monodromy: H_1 of a fiber surface has even rank");
  return det_identity_minus_t(m);
}

GromovSeriesResult knot_surgery_series_xk(const IntMatrix& m, long order) {
  Poly num = alexander_from_monodromy(m);
  Poly den = pow(Poly::one_minus_power(1), 2);
  return make_result(std::move(num), std::move(den), order);
}

GromovSeriesResult en_knot_series(const IntMatrix& m, long n, long order) {
  if (n < 2) throw std::invalid_argument("en series: defined for n >= 2");
  Poly num = alexander_from_monodromy(m) * pow(Poly::one_minus_power(1), n - 2);
  return make_result(std::move(num), Poly::constant(Rational(1)), order);
}

IntMatrix monodromy_unknot() { return IntMatrix(); }

IntMatrix monodromy_trefoil() { return IntMatrix::from_rows({{1, -1}, {1, 0}}); }

IntMatrix monodromy_figure_eight() { return IntMatrix::from_rows({{2, 1}, {1, 1}}); }

}  // namespace gw
