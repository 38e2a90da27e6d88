#include <doctest.h>

#include "gw/text_io.hpp"

using gw::IntMatrix;
using gw::parse_homology_action;
using gw::parse_matrix;
using gw::parse_rel_table;
using gw::parse_smatrix;
using gw::Rational;
using gw::RelEntry;
using gw::RelTable;

TEST_CASE("matrix text round trip") {
  const IntMatrix m = IntMatrix::from_rows({{1, -1}, {1, 0}});
  CHECK(parse_matrix(matrix_text(m)) == m);
  CHECK(matrix_text(m) == "1 -1\n1 0\n");
  CHECK(parse_matrix("[]") == IntMatrix());
  CHECK(parse_matrix("") == IntMatrix());
  CHECK(parse_matrix("# comment\n2\n") == IntMatrix::from_rows({{2}}));
  CHECK_THROWS(parse_matrix("1 2\n3\n"));
  CHECK_THROWS(parse_matrix("1 x\n"));
}

TEST_CASE("homology action blocks") {
  const auto action = parse_homology_action("1\n\n1 -1\n1 0\n");
  CHECK(action.top_degree() == 1);
  CHECK(action.map(0) == IntMatrix::identity(1));
  CHECK(action.map(1) == IntMatrix::from_rows({{1, -1}, {1, 0}}));
  CHECK(action.map(2) == IntMatrix());

  const auto torus = parse_homology_action("1\n\n1 0\n0 1\n\n1\n");
  CHECK(torus.top_degree() == 2);
  CHECK_THROWS(parse_homology_action("\n\n"));

  // a trivial middle degree
  const auto gap = parse_homology_action("1\n\n[]\n\n1\n");
  CHECK(gap.map(1) == IntMatrix());
}

TEST_CASE("relative table text is canonical and bit-stable") {
  RelTable t;
  t.add(RelEntry{2, {1, 0}, {3, 2}, Rational(7, 2)});
  t.add(RelEntry{0, {0, 0}, {}, Rational(1)});
  const std::string text = rel_table_text(t);
  CHECK(text == "gt-table\n0 0 0 [] 1\n2 1 0 [2,3] 7/2\n");
  CHECK(parse_rel_table(text) == t);
  CHECK(rel_table_text(parse_rel_table(text)) == text);

  // records in any order, duplicates merged
  const RelTable merged =
      parse_rel_table("gt-table\n2 1 0 [3,2] 3\n2 1 0 [2,3] 1/2\n0 0 0 [] 1\n");
  CHECK(merged == t);

  CHECK_THROWS(parse_rel_table("2 1 0 [2,3] 7/2\n"));        // missing header
  CHECK_THROWS(parse_rel_table("gt-table\n1 2 3\n"));        // short record
  CHECK_THROWS(parse_rel_table("gt-table\n1 2 3 [0] 1\n"));  // contact < 1
  CHECK_THROWS(parse_rel_table("gt-table\n1 2 3 [1] x\n"));  // bad count
}

TEST_CASE("s-matrix files") {
  const auto s = parse_smatrix("s-matrix\nbase zero\n[2,3] 1 0 5/2\n[2,3] 0 0 1\n");
  CHECK_FALSE(s.identity_base());
  CHECK(s.terms_for({2, 3}).size() == 2);
  CHECK(s.terms_for({3, 2}).empty());  // keys are canonical (sorted) on input
  CHECK(s.terms_for({2}).empty());

  const auto id = parse_smatrix("s-matrix\n");
  CHECK(id.identity_base());
  CHECK_THROWS(parse_smatrix("gt-table\n"));
  CHECK_THROWS(parse_smatrix("s-matrix\nbase odd\n"));
  CHECK_THROWS(parse_smatrix("s-matrix\n[0] 0 0 1\n"));
}
