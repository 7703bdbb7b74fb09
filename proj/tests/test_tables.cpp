#include <doctest.h>

#include "vn/plmaps.hpp"
#include "vn/tables.hpp"

using namespace vn;

TEST_CASE("table text round trip") {
  Table g = Table::parse("2 11 12 -> 11 12 2", 2);
  CHECK(g.size() == 3);
  CHECK(g.base() == 2);
  // rows sorted by the domain column
  CHECK(g.domain_word(0) == Word({1, 1}));
  CHECK(g.range_word(0) == Word({2}));
  CHECK(g.domain_word(2) == Word({2}));
  CHECK(Table::parse(g.str(), 2) == g);
  CHECK(Table::identity(3).str() == "\xce\xb5 -> \xce\xb5");
  CHECK(Table::parse("e -> e", 2) == Table::identity(2));
  CHECK(Table::parse(Table::identity(2).str(), 2) == Table::identity(2));

  CHECK_THROWS_AS(Table::parse("1 2 -> 1", 2), Error);       // size mismatch
  CHECK_THROWS_AS(Table::parse("1 11 -> 1 2", 2), Error);    // a not prefix-free
  CHECK_THROWS_AS(Table::parse("1 2 -> 1 21", 2), Error);    // b not maximal
  CHECK_THROWS_AS(Table::parse("1 2 3 -> 1 2 3", 2), Error);  // letters too big
  CHECK_THROWS_AS(Table::parse("1 2", 2), Error);            // no arrow
}

TEST_CASE("reduce collapses shared sibling splits") {
  // both columns split the same cell the same way
  Table fat = Table::parse("11 12 2 -> 11 12 2", 2);
  CHECK(reduce(fat) == Table::identity(2));
  Table fat2 = Table::parse("21 22 1 -> 11 12 2", 2);
  CHECK(reduce(fat2) == Table::parse("2 1 -> 1 2", 2));
  // a genuine shuffle at the split does not collapse
  Table twist = Table::parse("12 11 2 -> 11 12 2", 2);
  CHECK(reduce(twist) == twist);
  // reduce is idempotent and removes multi-level padding
  Table pad = Table::parse("111 112 12 2 -> 111 112 12 2", 2);
  CHECK(reduce(pad) == Table::identity(2));
  CHECK(reduce(reduce(fat2)) == reduce(fat2));
}

TEST_CASE("equal ignores presentation") {
  Table a = Table::parse("2 1 -> 1 2", 2);
  Table b = Table::parse("21 22 1 -> 11 12 2", 2);
  CHECK(equal(a, b));
  CHECK(!(a == b));
  CHECK(!equal(a, Table::identity(2)));
  CHECK(!equal(a, Table::parse("2 11 12 -> 11 12 2", 2)));
}

TEST_CASE("compose applies the right factor first") {
  // h sends [0,1/2) up by 1/2, g swaps halves again: g.h fixes nothing odd
  Table swap = Table::parse("2 1 -> 1 2", 2);
  CHECK(equal(compose(swap, swap), Table::identity(2)));

  Table g = Table::parse("1 21 22 -> 11 12 2", 2);
  Table h = Table::parse("11 12 2 -> 1 21 22", 2);
  CHECK(equal(compose(g, h), Table::identity(2)));
  CHECK(equal(invert(g), h));
  CHECK(equal(compose(invert(g), g), Table::identity(2)));

  // compare against pointwise evaluation
  PLMap pg = table_to_plmap(g), ps = table_to_plmap(swap);
  Table gs = compose(g, swap);
  PLMap pgs = table_to_plmap(gs);
  for (int i = 0; i < 16; ++i) {
    Rational x(i, 16);
    CHECK(evaluate(pgs, x) == evaluate(pg, evaluate(ps, x)));
  }
}

TEST_CASE("group laws on deterministic random elements") {
  for (int base : {2, 3}) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      Table g = random_table(base, 3, seed);
      Table h = random_table(base, 3, seed + 1000);
      Table k = random_table(base, 3, seed + 2000);
      CHECK(equal(compose(compose(g, h), k), compose(g, compose(h, k))));
      CHECK(equal(compose(g, invert(g)), Table::identity(base)));
      CHECK(equal(compose(invert(g), g), Table::identity(base)));
      CHECK(equal(invert(invert(g)), g));
      CHECK(reduce(reduce(g)) == reduce(g));
      CHECK(equal(reduce(g), g));
    }
    CHECK(random_table(base, 3, 42) == random_table(base, 3, 42));
    CHECK(random_table(base, 3, 42) != random_table(base, 3, 43));
  }
}

TEST_CASE("classification by boundary behaviour") {
  CHECK(classify(Table::identity(2)) == GroupClass::F);
  CHECK(classify(Table::parse("11 12 2 -> 1 21 22", 2)) == GroupClass::F);
  CHECK(classify(Table::parse("2 1 -> 1 2", 2)) == GroupClass::T);
  CHECK(classify(Table::parse("2 3 1 -> 1 2 3", 3)) == GroupClass::T);
  CHECK(classify(Table::parse("12 11 2 -> 11 12 2", 2)) == GroupClass::V);
  CHECK(classify(Table::parse("1 22 21 -> 11 12 2", 2)) == GroupClass::V);
  CHECK(class_str(GroupClass::F) == "F");
  CHECK(class_str(GroupClass::T) == "T");
  CHECK(class_str(GroupClass::V) == "V");
  // class is a property of the element, not the presentation
  Table rot = Table::parse("2 1 -> 1 2", 2);
  Table rot_fat = Table::parse("21 22 1 -> 11 12 2", 2);
  CHECK(equal(rot, rot_fat));
  CHECK(classify(rot_fat) == GroupClass::T);
}

TEST_CASE("codes of a table expose both columns") {
  Table g = Table::parse("2 32 1 31 33 -> 1 21 22 23 3", 3);
  CHECK(g.range_code().size() == 5);
  CHECK(g.domain_code().contains(Word({2, 3})));
  CHECK(g.range_code().contains(Word({3, 2})));
  CHECK(g.domain_code().base() == 3);
}
