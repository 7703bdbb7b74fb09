#include <doctest.h>

#include "vn/plmaps.hpp"

using namespace vn;

TEST_CASE("table to pl map and pointwise evaluation") {
  Table g = Table::parse("21 22 1 -> 1 21 22", 2);
  PLMap m = table_to_plmap(g);
  REQUIRE(m.pieces.size() == 3);
  // pieces sorted by domain; first sends [0,1/2) onto [1/2,3/4)
  CHECK(m.pieces[0].dom == to_interval(Word({1}), 2));
  CHECK(m.pieces[0].ran == to_interval(Word({2, 1}), 2));

  CHECK(evaluate(m, Rational(1, 3)) == Rational(2, 3));
  CHECK(evaluate(m, 0) == Rational(1, 2));
  CHECK(evaluate(m, Rational(1, 2)) == Rational(3, 4));
  CHECK(evaluate(m, Rational(3, 4)) == 0);
  CHECK(evaluate(m, Rational(7, 8)) == Rational(1, 4));
  CHECK_THROWS_AS(evaluate(m, 1), Error);
  CHECK_THROWS_AS(evaluate(m, Rational(-1, 2)), Error);
}

TEST_CASE("evaluation matches the defining substitution rule") {
  // b_i . w -> a_i . w on digit strings means an affine move on points
  Table g = Table::parse("1 21 22 -> 11 12 2", 2);
  PLMap m = table_to_plmap(g);
  for (int num = 0; num < 32; ++num) {
    Rational x(num, 32);
    x.canonicalize();
    Rational y = evaluate(m, x);
    // locate the domain cell by interval membership
    bool found = false;
    for (size_t i = 0; i < g.size(); ++i) {
      NadicInterval dom = to_interval(g.domain_word(i), 2);
      if (!dom.contains(x)) continue;
      NadicInterval ran = to_interval(g.range_word(i), 2);
      CHECK(ran.contains(y));
      // same offset within the cell, rescaled
      Rational scale_in = dom.right() - dom.left();
      Rational scale_out = ran.right() - ran.left();
      CHECK((y - ran.left()) * scale_in == (x - dom.left()) * scale_out);
      found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("round trip through pl form") {
  for (const char* text : {"2 1 -> 1 2", "1 21 22 -> 11 12 2",
                           "12 11 2 -> 11 12 2", "2 32 1 31 33 -> 1 21 22 23 3"}) {
    int base = std::string(text).find('3') == std::string::npos ? 2 : 3;
    Table g = Table::parse(text, base);
    CHECK(plmap_to_table(table_to_plmap(g)) == g);
  }
}

TEST_CASE("shape checks reject broken piece lists") {
  PLMap ok = table_to_plmap(Table::parse("2 1 -> 1 2", 2));
  CHECK(check_vtf_conditions(ok).ok);
  CHECK(check_vtf_conditions(ok).problems.empty());

  // ranges overlap (both halves land on [0,1/2))
  PLMap overlap{2,
                {{make_interval(0, 1, 2), make_interval(0, 1, 2)},
                 {make_interval(1, 1, 2), make_interval(0, 1, 2)}}};
  CHECK(!check_vtf_conditions(overlap).ok);
  CHECK(!check_vtf_conditions(overlap).problems.empty());
  CHECK_THROWS_AS(plmap_to_table(overlap), Error);

  // domain gap
  PLMap gap{2, {{make_interval(0, 1, 2), make_interval(0, 0, 2)}}};
  CHECK(!check_vtf_conditions(gap).ok);

  PLMap empty{2, {}};
  CHECK(!check_vtf_conditions(empty).ok);
}

TEST_CASE("discontinuities counted as a circle map") {
  CHECK(discontinuity_count(table_to_plmap(Table::identity(2))) == 0);
  // rigid rotation by 1/2 glues everywhere on the circle
  CHECK(discontinuity_count(table_to_plmap(Table::parse("2 1 -> 1 2", 2))) == 0);
  // interval homeomorphisms glue at the wrap too: 1 and 0 identify
  Table f = Table::parse("1 21 22 -> 11 12 2", 2);
  CHECK(classify(f) == GroupClass::F);
  CHECK(discontinuity_count(table_to_plmap(f)) == 0);
  // a genuine shuffle breaks at every seam
  Table v = Table::parse("12 11 2 -> 11 12 2", 2);
  CHECK(classify(v) == GroupClass::V);
  CHECK(discontinuity_count(table_to_plmap(v)) == 3);
}

TEST_CASE("pl map text form mentions every piece") {
  PLMap m = table_to_plmap(Table::parse("2 1 -> 1 2", 2));
  std::string s = plmap_str(m);
  CHECK(s.find("[0,1/2)") != std::string::npos);
  CHECK(s.find("[1/2,1)") != std::string::npos);
}
