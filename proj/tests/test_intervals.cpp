#include <doctest.h>

#include <random>

#include "vn/intervals.hpp"

using namespace vn;

TEST_CASE("interval endpoints and membership") {
  NadicInterval iv = make_interval(3, 2, 2);  // [3/4, 1)
  CHECK(iv.left() == Rational(3, 4));
  CHECK(iv.right() == 1);
  CHECK(iv.contains(Rational(3, 4)));
  CHECK(iv.contains(Rational(7, 8)));
  CHECK(!iv.contains(1));
  CHECK(!iv.contains(Rational(1, 2)));
  CHECK(make_interval(0, 0, 2).contains(0));
  CHECK_THROWS_AS(make_interval(4, 2, 2), Error);
  CHECK_THROWS_AS(make_interval(-1, 2, 2), Error);
}

TEST_CASE("word to interval correspondence") {
  // digits of the left endpoint are the letters shifted down by one
  CHECK(to_interval(Word({1}), 2) == make_interval(0, 1, 2));
  CHECK(to_interval(Word({2}), 2) == make_interval(1, 1, 2));
  CHECK(to_interval(Word({2, 1}), 2) == make_interval(2, 2, 2));
  CHECK(to_interval(Word({1, 3, 2}), 3) == make_interval(7, 3, 3));
  CHECK(to_interval(Word(), 5) == make_interval(0, 0, 5));

  std::mt19937_64 rng(7);
  for (int base : {2, 3, 7}) {
    for (int trial = 0; trial < 200; ++trial) {
      Word w;
      int len = static_cast<int>(rng() % 6);
      for (int i = 0; i < len; ++i)
        w = w.appended(1 + static_cast<int>(rng() % base));
      NadicInterval iv = to_interval(w, base);
      CHECK(to_word(iv) == w);
      CHECK(iv.depth == len);
      CHECK(iv.right() - iv.left() ==
            Rational(Int(1), ipow(base, static_cast<unsigned>(len))));
    }
  }
}

TEST_CASE("word order matches left endpoint order") {
  for (int ai = 0; ai < 8; ++ai)
    for (int bi = 0; bi < 8; ++bi) {
      Word a({1 + ai / 4, 1 + (ai / 2) % 2, 1 + ai % 2});
      Word b({1 + bi / 4, 1 + (bi / 2) % 2, 1 + bi % 2});
      NadicInterval ia = to_interval(a, 2), ib = to_interval(b, 2);
      CHECK((lex_compare(a, b) == LexOrder::Less) == (ia.left() < ib.left()));
    }
}

TEST_CASE("nesting mirrors the prefix relation") {
  Word u({2, 1}), v({2, 1, 2});
  NadicInterval outer = to_interval(u, 2), inner = to_interval(v, 2);
  CHECK(outer.contains(inner.left()));
  CHECK(outer.left() <= inner.left());
  CHECK(inner.right() <= outer.right());
  NadicInterval other = to_interval(Word({1}), 2);
  CHECK(!other.contains(inner.left()));
}

TEST_CASE("partition round trip") {
  auto code = PrefixCode::validated({Word({1, 1}), Word({1, 2}), Word({2})}, 2);
  auto parts = code_to_partition(code);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].left() == 0);
  CHECK(parts[1].left() == Rational(1, 4));
  CHECK(parts[2].left() == Rational(1, 2));
  CHECK(parts[2].right() == 1);
  CHECK(partition_to_code(parts).words() == code.words());

  std::mt19937_64 rng(11);
  for (int base : {2, 4}) {
    PrefixCode c = PrefixCode::level_one(base);
    for (int s = 0; s < 5; ++s) c = expand(c, c[rng() % c.size()]);
    CHECK(partition_to_code(code_to_partition(c)).words() == c.words());
    CHECK(partition_gaps(code_to_partition(c)).empty());
  }
}

TEST_CASE("gap reporting flags bad tilings") {
  auto full = code_to_partition(PrefixCode::level_one(2));
  CHECK(partition_gaps(full).empty());

  // hole at [1/2, 1)
  CHECK(!partition_gaps({make_interval(0, 1, 2)}).empty());
  // overlap
  CHECK(!partition_gaps({make_interval(0, 1, 2), make_interval(1, 1, 2),
                         make_interval(3, 2, 2)})
             .empty());
  CHECK_THROWS_AS(partition_to_code({make_interval(0, 1, 2)}), Error);
  // mixed bases cannot tile coherently
  CHECK(!partition_gaps({make_interval(0, 1, 2), make_interval(1, 1, 3),
                         make_interval(2, 1, 3)})
             .empty());
}
