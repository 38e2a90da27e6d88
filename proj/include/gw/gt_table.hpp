#pragma once

#include <limits>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "gw/rational.hpp"

namespace gw {

/*
 * Truncation budgets for assembling disconnected-curve tables. Each cap
 * bounds the accumulated absolute contribution of the pieces of a product:
 * sum of |euler characteristics|, sum of |bidegree| entries (L1), and total
 * number of contact points. Additive absolute budgets keep the exponential
 * and logarithm enumerations finite.
 */
struct TruncationCaps {
  static constexpr long unlimited = std::numeric_limits<long>::max();

  long euler = unlimited;
  long bidegree = unlimited;
  long contacts = unlimited;

  bool covers(const TruncationCaps& finer) const {
    return euler >= finer.euler && bidegree >= finer.bidegree && contacts >= finer.contacts;
  }
};

// One table record: a (possibly disconnected) curve configuration with its
// Euler characteristic, bidegree bookkeeping, ordered contact multiplicities
// along the gluing divisor, and exact count.
struct RelEntry {
  long euler = 0;
  std::pair<long, long> bidegree{0, 0};
  std::vector<long> contacts;  // each >= 1; canonical form is ascending
  Rational count;
};

// Absolute truncation measure of a record: (|chi|, |b1|+|b2|, #contacts).
struct EntryMeasure {
  long euler = 0;
  long bidegree = 0;
  long contacts = 0;

  EntryMeasure operator+(const EntryMeasure& o) const {
    return {euler + o.euler, bidegree + o.bidegree, contacts + o.contacts};
  }
  EntryMeasure scaled(long m) const { return {euler * m, bidegree * m, contacts * m}; }
  bool within(const TruncationCaps& caps) const {
    return euler <= caps.euler && bidegree <= caps.bidegree && contacts <= caps.contacts;
  }
  bool is_zero() const { return euler == 0 && bidegree == 0 && contacts == 0; }
};

/*
 * Finite table of relative curve counts. Keys are canonicalized (contact
 * vectors sorted ascending), duplicate keys merge by adding counts, and
 * zero counts are dropped, so equal tables compare equal. The truncation
 * field records the caps within which the table is complete.
 */
class RelTable {
 public:
  using Key = std::tuple<long, std::pair<long, long>, std::vector<long>>;

  RelTable() = default;
  explicit RelTable(TruncationCaps truncation) : truncation_(truncation) {}

  void add(RelEntry entry);
  const std::map<Key, Rational>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  const TruncationCaps& truncation() const { return truncation_; }

  static EntryMeasure measure(const Key& key);

  // Identity element of both the disconnected-product algebra and the
  // convolution: the empty configuration with count 1.
  static RelTable unit();

  friend bool operator==(const RelTable& a, const RelTable& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::map<Key, Rational> entries_;
  TruncationCaps truncation_;
};

/*
 * Gluing correction data. With the identity base, matching contact vectors
 * glue with weight 1 and no bidegree shift; user-supplied terms add (or,
 * with the zero base, replace) channels per contact vector.
 */
class SMatrix {
 public:
  struct Term {
    std::pair<long, long> bidegree_shift{0, 0};
    Rational weight;
  };

  static SMatrix identity() { return SMatrix(); }

  bool identity_base() const { return identity_base_; }
  void set_identity_base(bool on) { identity_base_ = on; }
  void add_term(std::vector<long> contacts, Term term);
  const std::vector<Term>& terms_for(const std::vector<long>& contacts) const;

 private:
  bool identity_base_ = true;
  std::map<std::vector<long>, std::vector<Term>> terms_;
};

// Disconnected-count table from connected counts: the exponential in the
// algebra where multiplication adds Euler characteristics and bidegrees and
// merges contact multisets, with 1/m! symmetry factors for repeated pieces.
RelTable gt_from_gw(const RelTable& connected, const TruncationCaps& caps);

// Formal logarithm, inverse of gt_from_gw within the caps; requires the
// empty-configuration entry to carry count exactly 1.
RelTable gt_log(const RelTable& disconnected, const TruncationCaps& caps);

/*
 * Convolution of two relative tables across the gluing divisor. Entries glue
 * when their canonical contact vectors agree (after S-matrix action; the
 * identity S-matrix demands exact equality), consuming the contacts:
 *   euler = chi_x + chi_y - 2l, bidegree adds (plus any S-matrix shift),
 *   count = count_x count_y (prod s_i) / l! times the S-matrix weight.
 */
RelTable convolve(const RelTable& x, const SMatrix& s_matrix, const RelTable& y,
                  const TruncationCaps& caps);

// Genus of a connected curve glued from Euler characteristics chi_x, chi_y
// at l points: 2 - 2g = chi_x + chi_y - 2l.
long glued_genus(long chi_x, long chi_y, long ell);

}  // namespace gw
