#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "gw/rational.hpp"
#include "gw/series.hpp"

namespace gw {

/*
 * Contact data along a fixed line. counts()[i] is the number of contact
 * points of order i+1; alpha-type data sits at prescribed points of the
 * line, beta-type data at unconstrained points. Trailing zeros are stripped
 * so equal data compares equal.
 */
class Tangency {
 public:
  Tangency() = default;
  explicit Tangency(std::vector<long> counts_by_order);

  // count points of one contact order, e.g. single(2) = one tangency point
  static Tangency single(long order);
  // count simple contact points, e.g. simple_points(d) = full transverse
  static Tangency simple_points(long count);

  long count_at(long order) const;  // order >= 1
  long max_order() const { return static_cast<long>(c_.size()); }
  long total_points() const;   // |alpha|
  long total_contact() const;  // I(alpha) = sum k alpha_k
  bool empty() const { return c_.empty(); }

  Tangency with_added(long order) const;
  Tangency with_removed(long order) const;
  friend Tangency operator+(const Tangency& a, const Tangency& b);
  // componentwise difference; requires b <= a
  friend Tangency operator-(const Tangency& a, const Tangency& b);

  const std::vector<long>& counts() const { return c_; }

  friend bool operator==(const Tangency& a, const Tangency& b) { return a.c_ == b.c_; }
  friend bool operator<(const Tangency& a, const Tangency& b) { return a.c_ < b.c_; }

 private:
  void strip();
  std::vector<long> c_;
};

struct SeveriKey {
  long degree = 0;
  long genus = 0;
  Tangency alpha;
  Tangency beta;
};

/*
 * Relative curve counts in the plane with contact conditions along a fixed
 * line, computed by the degeneration recursion that trades one point
 * condition for either a new fixed contact or a split-off line.
 *
 * The recursion's native quantity counts reduced but possibly reducible
 * curves; its genus bookkeeping therefore runs down to 1-d (a union of d
 * lines). Counts of irreducible curves are recovered from the reduced ones
 * by inclusion-exclusion over decompositions into irreducible components,
 * with the point and fixed-contact conditions distributed multinomially.
 * Both layers are memoized for the lifetime of the engine.
 */
class SeveriEngine {
 public:
  // Generalized Severi degree for irreducible curves. Returns 0 outside the
  // geometric ranges (genus not in [0, (d-1)(d-2)/2] or total contact != d).
  Rational irreducible(long degree, long genus, const Tangency& alpha, const Tangency& beta);

  // Reduced-curve count, the recursion's native value; genus may go down to
  // 1-d. Exposed for cross-checks.
  Rational reduced(long degree, long genus, const Tangency& alpha, const Tangency& beta);

 private:
  using Key = std::tuple<long, long, std::vector<long>, std::vector<long>>;

  Rational reduced_memo(long d, long g, const Tangency& alpha, const Tangency& beta);
  Rational disconnected_part(long d, long g, const Tangency& alpha, const Tangency& beta);

  std::map<Key, Rational> red_cache_;
  std::map<Key, Rational> irr_cache_;
};

// Number of degree-d, genus-g irreducible curves with tangency data (alpha,
// beta) along a fixed line, through 2d + g - 1 + |beta| general points.
// Negative tangency entries are rejected; out-of-range genus gives 0.
Rational severi_general(const SeveriKey& key);

// Severi degree indexed by node count: genus = (d-1)(d-2)/2 - delta, no
// fixed contacts, d simple moving contacts.
Rational severi_by_nodes(long degree, long nodes);

// Count of rational degree-d plane curves through 3d-1 general points, by
// the genus-0 quadratic recursion with N_1 = 1.
Rational kontsevich_nd(long degree);

// prod_{m=1..order} (1 - q^m)^{-12}, truncated at q^order: the generating
// series for section-class rational curve counts in the rational elliptic
// surface.
Series bryan_leung_series(long order);

}  // namespace gw
