#include "gw/gt_table.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "gw/combinatorics.hpp"

namespace gw {

void RelTable::add(RelEntry entry) {
  for (long s : entry.contacts)
    if (s < 1) throw std::invalid_argument("table: contact multiplicities must be >= 1");
  std::sort(entry.contacts.begin(), entry.contacts.end());
  Key key{entry.euler, entry.bidegree, std::move(entry.contacts)};
  auto [it, inserted] = entries_.emplace(std::move(key), entry.count);
  if (!inserted) it->second += entry.count;
  if (it->second.is_zero()) entries_.erase(it);
}

EntryMeasure RelTable::measure(const Key& key) {
  const auto& [euler, bidegree, contacts] = key;
  return {std::abs(euler), std::abs(bidegree.first) + std::abs(bidegree.second),
          static_cast<long>(contacts.size())};
}

RelTable RelTable::unit() {
  RelTable t;
  t.add(RelEntry{0, {0, 0}, {}, Rational(1)});
  return t;
}

void SMatrix::add_term(std::vector<long> contacts, Term term) {
  std::sort(contacts.begin(), contacts.end());
  terms_[std::move(contacts)].push_back(std::move(term));
}

const std::vector<SMatrix::Term>& SMatrix::terms_for(const std::vector<long>& contacts) const {
  static const std::vector<Term> none;
  const auto it = terms_.find(contacts);
  return it == terms_.end() ? none : it->second;
}

namespace {

struct Piece {
  RelTable::Key key;
  EntryMeasure measure;
  Rational count;
};

std::vector<Piece> validated_pieces(const RelTable& table, const TruncationCaps& caps,
                                    bool skip_unit_entry) {
  if (!table.truncation().covers(caps))
    throw std::invalid_argument("table is truncated below the requested caps");
  std::vector<Piece> pieces;
  for (const auto& [key, count] : table.entries()) {
    const EntryMeasure m = RelTable::measure(key);
    if (skip_unit_entry && m.is_zero()) continue;
    if (m.is_zero())
      throw std::invalid_argument("entry with zero truncation measure cannot be truncated");
    if (!m.within(caps)) throw std::invalid_argument("caps smaller than an input entry");
    pieces.push_back({key, m, count});
  }
  return pieces;
}

RelTable::Key merge_keys(const RelTable::Key& a, const RelTable::Key& b, long copies) {
  auto [chi, bideg, contacts] = a;
  chi += std::get<0>(b) * copies;
  bideg.first += std::get<1>(b).first * copies;
  bideg.second += std::get<1>(b).second * copies;
  for (long c = 0; c < copies; ++c)
    contacts.insert(contacts.end(), std::get<2>(b).begin(), std::get<2>(b).end());
  std::sort(contacts.begin(), contacts.end());
  return {chi, bideg, contacts};
}

// Enumerate multisets of pieces within the caps; `emit` receives the merged
// key, the multiplicity vector's contribution prod c_i^{m_i}, the total
// number of chosen pieces and the product of m_i! over the multiset.
void each_multiset(const std::vector<Piece>& pieces, const TruncationCaps& caps,
                   const std::function<void(const RelTable::Key&, const Rational&, long,
                                            const mpz_class&)>& emit) {
  std::function<void(size_t, const RelTable::Key&, const EntryMeasure&, const Rational&, long,
                     const mpz_class&)>
      walk = [&](size_t next, const RelTable::Key& key, const EntryMeasure& used,
                 const Rational& product, long chosen, const mpz_class& symmetry) {
        emit(key, product, chosen, symmetry);
        for (size_t i = next; i < pieces.size(); ++i) {
          EntryMeasure acc = used;
          Rational prod = product;
          RelTable::Key merged = key;
          for (long m = 1;; ++m) {
            acc = acc + pieces[i].measure;
            if (!acc.within(caps)) break;
            prod *= pieces[i].count;
            merged = merge_keys(merged, pieces[i].key, 1);
            walk(i + 1, merged, acc, prod, chosen + m, symmetry * factorial(m));
          }
        }
      };
  walk(0, RelTable::Key{0, {0, 0}, {}}, EntryMeasure{}, Rational(1), 0, mpz_class(1));
}

}  // namespace

RelTable gt_from_gw(const RelTable& connected, const TruncationCaps& caps) {
  const std::vector<Piece> pieces = validated_pieces(connected, caps, false);
  RelTable out(caps);
  each_multiset(pieces, caps,
                [&](const RelTable::Key& key, const Rational& product, long, const mpz_class& sym) {
                  RelEntry e{std::get<0>(key), std::get<1>(key), std::get<2>(key),
                             product / Rational(sym)};
                  out.add(std::move(e));
                });
  return out;
}

RelTable gt_log(const RelTable& disconnected, const TruncationCaps& caps) {
  const RelTable::Key unit_key{0, {0, 0}, {}};
  const auto it = disconnected.entries().find(unit_key);
  if (it == disconnected.entries().end() || !it->second.is_one())
    throw std::invalid_argument("log: table must carry the empty configuration with count 1");
  const std::vector<Piece> pieces = validated_pieces(disconnected, caps, true);
  RelTable out(caps);
  // log(1+X) = sum (-1)^{k+1} X^k / k; a multiset with multiplicities m_i,
  // k = sum m_i, contributes (-1)^{k+1} (k-1)! / prod m_i! times the counts.
  each_multiset(pieces, caps,
                [&](const RelTable::Key& key, const Rational& product, long chosen,
                    const mpz_class& sym) {
                  if (chosen == 0) return;
                  Rational coeff = Rational(factorial(chosen - 1)) / Rational(sym);
                  if (chosen % 2 == 0) coeff = -coeff;
                  out.add(RelEntry{std::get<0>(key), std::get<1>(key), std::get<2>(key),
                                   product * coeff});
                });
  return out;
}

RelTable convolve(const RelTable& x, const SMatrix& s_matrix, const RelTable& y,
                  const TruncationCaps& caps) {
  if (!x.truncation().covers(caps) || !y.truncation().covers(caps))
    throw std::invalid_argument("incompatible truncation caps");
  RelTable out(caps);
  for (const auto& [kx, cx] : x.entries()) {
    for (const auto& [ky, cy] : y.entries()) {
      const auto& sx = std::get<2>(kx);
      const auto& sy = std::get<2>(ky);
      if (sx != sy) continue;  // identity matching of canonical contact vectors
      const long ell = static_cast<long>(sx.size());
      Rational weight = cx * cy;
      for (long s : sx) weight *= Rational(s);
      weight /= Rational(factorial(ell));
      const long chi = std::get<0>(kx) + std::get<0>(ky) - 2 * ell;
      const std::pair<long, long> bideg{std::get<1>(kx).first + std::get<1>(ky).first,
                                        std::get<1>(kx).second + std::get<1>(ky).second};
      auto emit = [&](const SMatrix::Term& term) {
        RelEntry e{chi,
                   {bideg.first + term.bidegree_shift.first,
                    bideg.second + term.bidegree_shift.second},
                   {},
                   weight * term.weight};
        if (RelTable::measure({e.euler, e.bidegree, {}}).within(caps)) out.add(std::move(e));
      };
      if (s_matrix.identity_base()) emit(SMatrix::Term{{0, 0}, Rational(1)});
      for (const auto& term : s_matrix.terms_for(sx)) emit(term);
    }
  }
  return out;
}

long glued_genus(long chi_x, long chi_y, long ell) {
  if (ell < 0) throw std::invalid_argument("glued genus: negative contact count");
  if ((chi_x + chi_y) % 2 != 0)
    throw std::invalid_argument("glued genus: odd total Euler characteristic");
  return 1 - (chi_x + chi_y) / 2 + ell;
}

}  // namespace gw
