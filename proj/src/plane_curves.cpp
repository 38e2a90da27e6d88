#include "gw/plane_curves.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gw/combinatorics.hpp"

namespace gw {

void Tangency::strip() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Tangency::Tangency(std::vector<long> counts_by_order) : c_(std::move(counts_by_order)) {
  for (long v : c_)
    if (v < 0) throw std::invalid_argument("tangency: negative contact count");
  strip();
}

Tangency Tangency::single(long order) {
  if (order < 1) throw std::invalid_argument("tangency: contact order must be >= 1");
  std::vector<long> c(static_cast<size_t>(order), 0);
  c.back() = 1;
  return Tangency(std::move(c));
}

Tangency Tangency::simple_points(long count) {
  if (count < 0) throw std::invalid_argument("tangency: negative contact count");
  if (count == 0) return Tangency();
  return Tangency({count});
}

long Tangency::count_at(long order) const {
  if (order < 1 || order > max_order()) return 0;
  return c_[static_cast<size_t>(order - 1)];
}

long Tangency::total_points() const {
  long s = 0;
  for (long v : c_) s += v;
  return s;
}

long Tangency::total_contact() const {
  long s = 0;
  for (size_t i = 0; i < c_.size(); ++i) s += static_cast<long>(i + 1) * c_[i];
  return s;
}

Tangency Tangency::with_added(long order) const {
  std::vector<long> c = c_;
  if (order > static_cast<long>(c.size())) c.resize(static_cast<size_t>(order), 0);
  ++c[static_cast<size_t>(order - 1)];
  return Tangency(std::move(c));
}

Tangency Tangency::with_removed(long order) const {
  if (count_at(order) <= 0) throw std::invalid_argument("tangency: removing absent contact");
  std::vector<long> c = c_;
  --c[static_cast<size_t>(order - 1)];
  return Tangency(std::move(c));
}

Tangency operator+(const Tangency& a, const Tangency& b) {
  std::vector<long> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return Tangency(std::move(c));
}

Tangency operator-(const Tangency& a, const Tangency& b) {
  std::vector<long> c = a.c_;
  if (b.c_.size() > c.size()) throw std::invalid_argument("tangency: difference underflow");
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Tangency(std::move(c));  // constructor rejects negatives
}

namespace {

long genus_max(long d) { return (d - 1) * (d - 2) / 2; }

// All sub-tangencies a' <= a, componentwise.
void each_subtangency(const Tangency& a, const std::function<void(const Tangency&)>& fn) {
  std::vector<long> cur(a.counts().size(), 0);
  std::function<void(size_t)> walk = [&](size_t i) {
    if (i == cur.size()) {
      fn(Tangency(cur));
      return;
    }
    for (long v = 0; v <= a.counts()[i]; ++v) {
      cur[i] = v;
      walk(i + 1);
    }
    cur[i] = 0;
  };
  walk(0);
}

// All tangencies g with total contact exactly `total` (partitions of
// `total` by part size).
void each_partition_tangency(long total, const std::function<void(const Tangency&)>& fn) {
  std::vector<long> counts(static_cast<size_t>(std::max<long>(total, 0)), 0);
  std::function<void(long, long)> walk = [&](long remaining, long max_part) {
    if (remaining == 0) {
      fn(Tangency(counts));
      return;
    }
    for (long part = std::min(remaining, max_part); part >= 1; --part) {
      ++counts[static_cast<size_t>(part - 1)];
      walk(remaining - part, part);
      --counts[static_cast<size_t>(part - 1)];
    }
  };
  if (total < 0) return;
  walk(total, std::max<long>(total, 1));
}

Rational power_weight(const Tangency& gamma) {
  Rational w(1);
  for (size_t i = 0; i < gamma.counts().size(); ++i)
    w *= pow(Rational(static_cast<long>(i + 1)), gamma.counts()[i]);
  return w;
}

}  // namespace

Rational SeveriEngine::reduced(long d, long g, const Tangency& alpha, const Tangency& beta) {
  return reduced_memo(d, g, alpha, beta);
}

Rational SeveriEngine::reduced_memo(long d, long g, const Tangency& alpha, const Tangency& beta) {
  if (d < 1) return Rational(0);
  if (alpha.total_contact() + beta.total_contact() != d) return Rational(0);
  if (g < 1 - d || g > genus_max(d)) return Rational(0);
  if (d == 1) return Rational(1);  // a line; g = 0 and one simple contact

  const Key key{d, g, alpha.counts(), beta.counts()};
  const auto hit = red_cache_.find(key);
  if (hit != red_cache_.end()) return hit->second;

  Rational acc(0);

  // A point condition moves onto the line and pins a moving contact.
  for (long k = 1; k <= beta.max_order(); ++k) {
    if (beta.count_at(k) == 0) continue;
    acc += Rational(k) * reduced_memo(d, g, alpha.with_added(k), beta.with_removed(k));
  }

  // The line splits off; the residual degree-(d-1) curve keeps contacts
  // alpha' <= alpha, inherits beta, and acquires new contacts gamma, each
  // weighted by its multiplicity. Genus bookkeeping: g' = g - |gamma| + 1.
  each_subtangency(alpha, [&](const Tangency& alpha_p) {
    const long rest = (d - 1) - alpha_p.total_contact() - beta.total_contact();
    if (rest < 0) return;
    each_partition_tangency(rest, [&](const Tangency& gamma) {
      const Tangency beta_p = beta + gamma;
      const long g_p = g - gamma.total_points() + 1;
      const Rational sub = reduced_memo(d - 1, g_p, alpha_p, beta_p);
      if (sub.is_zero()) return;
      const Rational coeff = multi_binom(alpha.counts(), alpha_p.counts()) *
                             multi_binom(beta_p.counts(), beta.counts()) * power_weight(gamma);
      acc += coeff * sub;
    });
  });

  red_cache_.emplace(key, acc);
  return acc;
}

Rational SeveriEngine::irreducible(long d, long g, const Tangency& alpha, const Tangency& beta) {
  if (d < 1) return Rational(0);
  if (alpha.total_contact() + beta.total_contact() != d) return Rational(0);
  if (g < 0 || g > genus_max(d)) return Rational(0);

  const Key key{d, g, alpha.counts(), beta.counts()};
  const auto hit = irr_cache_.find(key);
  if (hit != irr_cache_.end()) return hit->second;

  const Rational value = reduced_memo(d, g, alpha, beta) - disconnected_part(d, g, alpha, beta);
  irr_cache_.emplace(key, value);
  return value;
}

/*
 * Sum over decompositions of a reduced curve into at least two irreducible
 * components. Components are enumerated as a multiset in nonincreasing key
 * order; each assembly contributes
 *
 *   prod_j N_irr(K_j) * n! / prod_j n_j! * prod_k alpha_k! / prod_{j,k}
 *   alpha_{j,k}! / prod m_i!
 *
 * where n_j = 2 d_j + g_j - 1 + |beta_j| is the number of point conditions a
 * component absorbs and m_i are multiplicities of repeated component keys.
 * The total genus satisfies sum g_j = g + c - 1.
 */
Rational SeveriEngine::disconnected_part(long d, long g, const Tangency& alpha,
                                         const Tangency& beta) {
  struct Comp {
    long d;
    long g;
    std::vector<long> alpha;
    std::vector<long> beta;
    auto tie() const { return std::tie(d, g, alpha, beta); }
    bool operator<=(const Comp& o) const { return !(o.tie() < tie()); }
  };

  const long n_total = 2 * d + g - 1 + beta.total_points();
  Rational total(0);

  // DFS state: remaining degree/alpha/beta, genus spent, factorial
  // accumulators, last chosen component (for canonical nonincreasing order)
  // and its run length.
  std::function<void(long, const Tangency&, const Tangency&, long, long, const Rational&,
                     const Comp*, long)>
      walk = [&](long rem_d, const Tangency& rem_a, const Tangency& rem_b, long genus_spent,
                 long comps, const Rational& partial, const Comp* last, long run) {
        if (rem_d == 0) {
          if (comps < 2) return;
          if (!rem_a.empty() || !rem_b.empty()) return;
          if (genus_spent != g + comps - 1) return;
          Rational term = partial;
          if (run > 1) term /= Rational(factorial(run));
          term *= Rational(factorial(n_total));
          for (size_t i = 0; i < alpha.counts().size(); ++i)
            term *= Rational(factorial(alpha.counts()[i]));
          total += term;
          return;
        }
        // next component: degree at most rem_d, and canonical order
        for (long dj = rem_d; dj >= 1; --dj) {
          if (comps == 0 && dj == d) continue;  // at least two components
          each_subtangency(rem_a, [&](const Tangency& aj) {
            if (aj.total_contact() > dj) return;
            const long need_b = dj - aj.total_contact();
            each_subtangency(rem_b, [&](const Tangency& bj) {
              if (bj.total_contact() != need_b) return;
              for (long gj = 0; gj <= genus_max(dj); ++gj) {
                // components after the first must be <= the previous one
                Comp cur{dj, gj, aj.counts(), bj.counts()};
                if (last != nullptr && !(cur <= *last)) continue;
                const Rational count = irreducible(dj, gj, aj, bj);
                if (count.is_zero()) continue;
                const long nj = 2 * dj + gj - 1 + bj.total_points();
                Rational next = partial * count / Rational(factorial(nj));
                for (size_t i = 0; i < aj.counts().size(); ++i)
                  next /= Rational(factorial(aj.counts()[i]));
                const bool same = last != nullptr && !(cur.tie() < last->tie()) &&
                                  !(last->tie() < cur.tie());
                if (same) {
                  walk(rem_d - dj, rem_a - aj, rem_b - bj, genus_spent + gj, comps + 1, next,
                       last, run + 1);
                } else {
                  Rational adjusted = next;
                  if (run > 1) adjusted /= Rational(factorial(run));
                  Comp frozen = cur;
                  walk(rem_d - dj, rem_a - aj, rem_b - bj, genus_spent + gj, comps + 1, adjusted,
                       &frozen, 1);
                }
              }
            });
          });
        }
      };

  walk(d, alpha, beta, 0, 0, Rational(1), nullptr, 0);
  return total;
}

Rational severi_general(const SeveriKey& key) {
  SeveriEngine engine;
  return engine.irreducible(key.degree, key.genus, key.alpha, key.beta);
}

Rational severi_by_nodes(long degree, long nodes) {
  if (degree < 1) throw std::invalid_argument("severi: degree must be positive");
  if (nodes < 0 || nodes > genus_max(degree))
    throw std::invalid_argument("severi: node count out of range");
  SeveriEngine engine;
  return engine.irreducible(degree, genus_max(degree) - nodes, Tangency(),
                            Tangency::simple_points(degree));
}

Rational kontsevich_nd(long degree) {
  if (degree < 1) throw std::invalid_argument("kontsevich: degree must be positive");
  std::vector<Rational> n(static_cast<size_t>(degree) + 1, Rational(0));
  n[1] = Rational(1);
  for (long m = 2; m <= degree; ++m) {
    Rational acc(0);
    for (long d1 = 1; d1 < m; ++d1) {
      const long d2 = m - d1;
      const Rational a = Rational(d1 * d1 * d2 * d2) * binom(3 * m - 4, 3 * d1 - 2);
      const Rational b = Rational(d1 * d1 * d1 * d2) * binom(3 * m - 4, 3 * d1 - 1);
      acc += n[static_cast<size_t>(d1)] * n[static_cast<size_t>(d2)] * (a - b);
    }
    n[static_cast<size_t>(m)] = acc;
  }
  return n[static_cast<size_t>(degree)];
}

Series bryan_leung_series(long order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  // -12 sum_m log(1 - q^m) = 12 sum_m sum_j q^{mj}/j, then exponentiate.
  std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
  for (long m = 1; m <= order; ++m)
    for (long j = 1; m * j <= order; ++j)
      c[static_cast<size_t>(m * j)] += Rational(12) / Rational(j);
  return series_exp(Series(order, std::move(c)));
}

}  // namespace gw
