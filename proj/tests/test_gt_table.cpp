#include <doctest.h>

#include <random>

#include "gw/gt_table.hpp"
#include "oracles.hpp"

using gw::convolve;
using gw::glued_genus;
using gw::gt_from_gw;
using gw::gt_log;
using gw::Rational;
using gw::RelEntry;
using gw::RelTable;
using gw::SMatrix;
using gw::TruncationCaps;

namespace {

RelTable single(long euler, std::pair<long, long> bidegree, std::vector<long> contacts,
                Rational count) {
  RelTable t;
  t.add(RelEntry{euler, bidegree, std::move(contacts), std::move(count)});
  return t;
}

Rational count_of(const RelTable& t, long euler, std::pair<long, long> bidegree,
                  std::vector<long> contacts) {
  const auto it = t.entries().find({euler, bidegree, contacts});
  return it == t.entries().end() ? Rational(0) : it->second;
}

}  // namespace

TEST_CASE("tables canonicalize contacts, merge keys and drop zeros") {
  RelTable t;
  t.add(RelEntry{2, {1, 0}, {3, 2}, Rational(1)});
  t.add(RelEntry{2, {1, 0}, {2, 3}, Rational(2)});
  CHECK(t.size() == 1);
  CHECK(count_of(t, 2, {1, 0}, {2, 3}) == Rational(3));
  t.add(RelEntry{2, {1, 0}, {2, 3}, Rational(-3)});
  CHECK(t.size() == 0);
  CHECK_THROWS_AS(t.add(RelEntry{0, {0, 0}, {0}, Rational(1)}), std::invalid_argument);
}

TEST_CASE("exponential of a single entry produces factorial weights") {
  const Rational lambda(3, 2);
  const RelTable exp =
      gt_from_gw(single(2, {1, 0}, {}, lambda), TruncationCaps{6, 3, 0});
  CHECK(count_of(exp, 0, {0, 0}, {}) == Rational(1));
  CHECK(count_of(exp, 2, {1, 0}, {}) == lambda);
  CHECK(count_of(exp, 4, {2, 0}, {}) == lambda * lambda / Rational(2));
  CHECK(count_of(exp, 6, {3, 0}, {}) == lambda * lambda * lambda / Rational(6));
  CHECK(exp.size() == 4);
}

TEST_CASE("exponential of the empty table is the unit table") {
  CHECK(gt_from_gw(RelTable(), TruncationCaps{4, 4, 4}) == RelTable::unit());
}

TEST_CASE("distinct pieces combine without symmetry factors") {
  RelTable connected;
  connected.add(RelEntry{2, {1, 0}, {}, Rational(1)});
  connected.add(RelEntry{2, {0, 1}, {}, Rational(1)});
  const RelTable exp = gt_from_gw(connected, TruncationCaps{4, 2, 0});
  CHECK(count_of(exp, 4, {1, 1}, {}) == Rational(1));
}

TEST_CASE("caps must admit every input entry and forbid neutral entries") {
  CHECK_THROWS_AS(gt_from_gw(single(4, {0, 0}, {}, Rational(1)), TruncationCaps{2, 2, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gt_from_gw(single(0, {0, 0}, {}, Rational(1)), TruncationCaps{2, 2, 2}),
                  std::invalid_argument);
  // tables carry their own truncation; finer requests are rejected
  const RelTable truncated = gt_from_gw(single(2, {0, 0}, {}, Rational(1)), TruncationCaps{2, 0, 0});
  CHECK_THROWS_AS(gt_from_gw(truncated, TruncationCaps{4, 0, 0}), std::invalid_argument);
}

TEST_CASE("convolution consumes matching contacts with the product weight") {
  const RelTable x = single(2, {1, 0}, {2, 3}, Rational(1));
  const RelTable y = single(2, {0, 1}, {3, 2}, Rational(1));
  const RelTable glued = convolve(x, SMatrix::identity(), y, TruncationCaps{10, 10, 10});
  CHECK(glued.size() == 1);
  // (2*3)/2! = 3, euler 2+2-2*2
  CHECK(count_of(glued, 0, {1, 1}, {}) == Rational(3));
}

TEST_CASE("empty contact vectors glue with weight one") {
  const RelTable x = single(2, {1, 0}, {}, Rational(5, 3));
  const RelTable y = single(-2, {0, 2}, {}, Rational(3));
  const RelTable glued = convolve(x, SMatrix::identity(), y, TruncationCaps{10, 10, 10});
  CHECK(count_of(glued, 0, {1, 2}, {}) == Rational(5));
}

TEST_CASE("identity matching requires equal contact vectors") {
  const RelTable x = single(2, {1, 0}, {2}, Rational(1));
  const RelTable y = single(2, {0, 1}, {3}, Rational(1));
  CHECK(convolve(x, SMatrix::identity(), y, TruncationCaps{10, 10, 10}).size() == 0);
}

TEST_CASE("unit law and commutativity on closed tables") {
  std::mt19937 rng(59);
  for (int i = 0; i < 8; ++i) {
    const RelTable x = gw::testing::random_closed_table(rng);
    const TruncationCaps caps{20, 20, 20};
    CHECK(convolve(x, SMatrix::identity(), RelTable::unit(), caps) == x);
    CHECK(convolve(RelTable::unit(), SMatrix::identity(), x, caps) == x);
    const RelTable y = gw::testing::random_closed_table(rng);
    CHECK(convolve(x, SMatrix::identity(), y, caps) == convolve(y, SMatrix::identity(), x, caps));
  }
}

TEST_CASE("euler bookkeeping of glued entries") {
  for (long chi_x = -2; chi_x <= 2; ++chi_x)
    for (long chi_y = -2; chi_y <= 2; ++chi_y)
      for (long ell = 0; ell <= 3; ++ell) {
        std::vector<long> s(static_cast<size_t>(ell), 2);
        const RelTable glued = convolve(single(chi_x, {0, 0}, s, Rational(1)),
                                        SMatrix::identity(), single(chi_y, {0, 0}, s, Rational(1)),
                                        TruncationCaps{100, 100, 100});
        REQUIRE(glued.size() == 1);
        CHECK(std::get<0>(glued.entries().begin()->first) == chi_x + chi_y - 2 * ell);
      }
}

TEST_CASE("gluing weight matches brute-force sheet and ordering enumeration") {
  // all contact vectors with l <= 3, entries <= 4
  std::vector<std::vector<long>> vectors{{}};
  for (long l = 1; l <= 3; ++l) {
    std::vector<long> s(static_cast<size_t>(l), 1);
    while (true) {
      if (std::is_sorted(s.begin(), s.end())) vectors.push_back(s);
      size_t i = 0;
      while (i < s.size() && s[i] == 4) s[i++] = 1;
      if (i == s.size()) break;
      ++s[i];
    }
  }
  for (const auto& s : vectors) {
    const Rational cx(7, 2);
    const Rational cy(-3, 5);
    const RelTable glued =
        convolve(single(2, {1, 0}, s, cx), SMatrix::identity(), single(0, {0, 1}, s, cy),
                 TruncationCaps{100, 100, 100});
    REQUIRE(glued.size() == 1);
    const Rational weight = Rational(gw::testing::count_gluing_tuples(s)) /
                            Rational(gw::testing::count_orderings(static_cast<long>(s.size())));
    CHECK(glued.entries().begin()->second == cx * cy * weight);
  }
}

TEST_CASE("logarithm inverts the exponential within caps") {
  std::mt19937 rng(61);
  for (int i = 0; i < 10; ++i) {
    const RelTable connected = gw::testing::random_closed_table(rng);
    const TruncationCaps caps{12, 18, 6};
    const RelTable exp = gt_from_gw(connected, caps);
    CHECK(gt_log(exp, caps) == connected);
  }
  CHECK_THROWS_AS(gt_log(RelTable(), TruncationCaps{2, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(gt_log(single(0, {0, 0}, {}, Rational(2)), TruncationCaps{2, 2, 2}),
                  std::invalid_argument);
}

TEST_CASE("S-matrix terms shift bidegrees and scale weights") {
  SMatrix s;
  s.set_identity_base(false);
  s.add_term({2}, SMatrix::Term{{1, -1}, Rational(1, 2)});
  const RelTable x = single(2, {1, 0}, {2}, Rational(1));
  const RelTable y = single(2, {0, 1}, {2}, Rational(1));
  const RelTable glued = convolve(x, s, y, TruncationCaps{10, 10, 10});
  CHECK(glued.size() == 1);
  // weight (2)/1! * 1/2 = 1, bidegree (1,1) + (1,-1)
  CHECK(count_of(glued, 2, {2, 0}, {}) == Rational(1));
  // unlisted channels vanish with the zero base
  const RelTable z = single(2, {0, 0}, {3}, Rational(1));
  CHECK(convolve(z, s, z, TruncationCaps{10, 10, 10}).size() == 0);
  // identity base keeps the diagonal and adds the correction
  SMatrix both;
  both.add_term({2}, SMatrix::Term{{1, -1}, Rational(1, 2)});
  const RelTable mixed = convolve(x, both, y, TruncationCaps{10, 10, 10});
  CHECK(mixed.size() == 2);
  CHECK(count_of(mixed, 2, {1, 1}, {}) == Rational(2));
}

TEST_CASE("glued genus from Euler characteristics") {
  CHECK(glued_genus(2, 2, 1) == 0);
  CHECK(glued_genus(2, 2, 2) == 1);
  CHECK(glued_genus(0, 2, 1) == 1);
  CHECK_THROWS_AS(glued_genus(1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(glued_genus(2, 2, -1), std::invalid_argument);
}

TEST_CASE("convolution enforces compatible truncation caps") {
  const RelTable x = gt_from_gw(single(2, {1, 0}, {}, Rational(1)), TruncationCaps{4, 2, 0});
  CHECK_THROWS_AS(convolve(x, SMatrix::identity(), RelTable::unit(), TruncationCaps{8, 4, 0}),
                  std::invalid_argument);
}
