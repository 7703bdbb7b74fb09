#include <doctest.h>

#include "vn/embeddings.hpp"
#include "vn/plmaps.hpp"

using namespace vn;

TEST_CASE("letter recoding hits the pinned values") {
  CHECK(source_base(2, 1) == 2);
  CHECK(source_base(2, 2) == 3);
  CHECK(source_base(2, 3) == 4);
  CHECK(source_base(3, 2) == 5);
  CHECK(source_base(4, 2) == 7);

  CHECK(gamma(1, 2, 2) == Word({1, 1}));
  CHECK(gamma(2, 2, 2) == Word({1, 2}));
  CHECK(gamma(3, 2, 2) == Word({2}));

  CHECK(gamma(1, 3, 2) == Word({1, 1}));
  CHECK(gamma(2, 3, 2) == Word({1, 2}));
  CHECK(gamma(3, 3, 2) == Word({1, 3}));
  CHECK(gamma(4, 3, 2) == Word({2}));
  CHECK(gamma(5, 3, 2) == Word({3}));

  CHECK(gamma(1, 2, 3) == Word({1, 1, 1}));
  CHECK(gamma(2, 2, 3) == Word({1, 1, 2}));
  CHECK(gamma(3, 2, 3) == Word({1, 2}));
  CHECK(gamma(4, 2, 3) == Word({2}));

  // depth one: the embedding of V_n into itself is the identity recoding
  CHECK(gamma(1, 2, 1) == Word({1}));
  CHECK(gamma(2, 2, 1) == Word({2}));

  CHECK_THROWS_AS(gamma(0, 2, 2), Error);
  CHECK_THROWS_AS(gamma(4, 2, 2), Error);
}

TEST_CASE("letter images form a maximal code ordered like the letters") {
  for (auto [n, k] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 2}, {4, 2}, {3, 4}}) {
    int m = source_base(n, k);
    std::vector<Word> images;
    for (int y = 1; y <= m; ++y) images.push_back(gamma(y, n, k));
    CHECK(is_maximal_prefix_code(images, n));
    for (int y = 1; y < m; ++y)
      CHECK(lex_compare(images[y - 1], images[y]) == LexOrder::Less);
  }
}

TEST_CASE("word morphism properties") {
  CHECK(f_morphism(Word({3, 1}), 2, 2) == Word({2, 1, 1}));
  CHECK(f_morphism(Word(), 2, 2).empty());
  // homomorphism: f(uv) = f(u)f(v)
  Word u({1, 3}), v({2, 2, 1});
  CHECK(f_morphism(u + v, 2, 2) == f_morphism(u, 2, 2) + f_morphism(v, 2, 2));

  // exhaustive over short words: injective, prefix- and order-preserving
  std::vector<Word> all{Word()};
  for (int l = 0; l < 3; ++l) {
    size_t hi = all.size();
    for (size_t i = 0; i < hi; ++i)
      if (static_cast<int>(all[i].size()) == l)
        for (int j = 1; j <= 3; ++j) all.push_back(all[i].appended(j));
  }
  for (const Word& x : all)
    for (const Word& y : all) {
      Word fx = f_morphism(x, 2, 2), fy = f_morphism(y, 2, 2);
      if (!(x == y)) CHECK(!(fx == fy));
      CHECK(is_prefix(x, y) == is_prefix(fx, fy));
      LexOrder before = lex_compare(x, y), after = lex_compare(fx, fy);
      if (before != LexOrder::PrefixIncomparable) CHECK(before == after);
    }
}

TEST_CASE("generator images satisfy the isometry relations in the big algebra") {
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    int m = source_base(n, k);
    std::vector<CuntzSum> imgs;
    for (int y = 1; y <= m; ++y)
      imgs.push_back(iota_sum(
          CuntzSum::monomial(m, 1, Word::single(y), Word()), n, k));
    CuntzSum range_sum(n);
    for (int y = 0; y < m; ++y) {
      for (int z = 0; z < m; ++z) {
        CuntzSum prod = multiply_sums(adjoint(imgs[y]), imgs[z]);
        if (y == z)
          CHECK(is_identity(prod));
        else
          CHECK(prod.is_zero());
      }
      range_sum = add(range_sum, multiply_sums(imgs[y], adjoint(imgs[y])));
    }
    CHECK(is_identity(range_sum));
  }
}

TEST_CASE("sum embedding is linear and multiplicative") {
  int n = 2, k = 2, m = source_base(n, k);  // m = 3
  CuntzSum s = CuntzSum::parse("S[1]S*[3] + 1/2*S[23]S*[2]", m);
  CuntzSum t = CuntzSum::parse("S[3]S*[12] + 3*S[2]S*[]", m);
  CHECK(iota_sum(multiply_sums(s, t), n, k) ==
        multiply_sums(iota_sum(s, n, k), iota_sum(t, n, k)));
  CHECK(iota_sum(add(s, t), n, k) == add(iota_sum(s, n, k), iota_sum(t, n, k)));
  CHECK(iota_sum(adjoint(s), n, k) == adjoint(iota_sum(s, n, k)));
  CHECK(iota_sum(CuntzSum::identity(m), n, k) == CuntzSum::identity(n));
  // S_2 over three letters becomes S_12 over two
  CHECK(iota_sum(CuntzSum::parse("S[2]", m), n, k) ==
        CuntzSum::parse("S[12]", n));
  CHECK(iota_monomial(CuntzMonomial{1, Word({3}), Word({1})}, n, k) ==
        CuntzSum::parse("S[2]S*[11]", n));
}

TEST_CASE("table embedding against the pinned example") {
  Table g = Table::parse("2 32 1 31 33 -> 1 21 22 23 3", 3);
  Table eg = embed_table(g, 2, 2);
  CHECK(eg == Table::parse("12 212 11 211 22 -> 11 1211 1212 122 2", 2));
  // conjugated action: E(g) moves 1/3 the way gamma recoding says, not g
  CHECK(evaluate(table_to_plmap(g), Rational(1, 3)) == Rational(7, 9));
  CHECK(evaluate(table_to_plmap(eg), Rational(1, 3)) == Rational(1, 12));
}

TEST_CASE("table embedding is an injective homomorphism") {
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}}) {
    int m = source_base(n, k);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      Table g = random_table(m, 3, seed);
      Table h = random_table(m, 3, seed + 500);
      Table eg = embed_table(g, n, k), eh = embed_table(h, n, k);
      CHECK(equal(compose(eg, eh), embed_table(compose(g, h), n, k)));
      CHECK(equal(invert(eg), embed_table(invert(g), n, k)));
      if (!equal(g, h)) CHECK(!equal(eg, eh));
      // the algebra picture of the embedded table matches the embedded picture
      CHECK(psi(eg) == iota_sum(psi(g), n, k));
    }
    CHECK(equal(embed_table(Table::identity(m), n, k), Table::identity(n)));
  }
}

TEST_CASE("table embedding preserves order classes") {
  // shift by one cell: a T element of V_3
  Table rot = Table::parse("2 3 1 -> 1 2 3", 3);
  CHECK(classify(rot) == GroupClass::T);
  CHECK(classify(embed_table(rot, 2, 2)) == GroupClass::T);

  Table asc = Table::parse("1 21 22 23 3 -> 11 12 13 2 3", 3);
  CHECK(classify(asc) == GroupClass::F);
  CHECK(classify(embed_table(asc, 2, 2)) == GroupClass::F);

  Table tw = Table::parse("2 32 1 31 33 -> 1 21 22 23 3", 3);
  CHECK(classify(tw) == GroupClass::V);
  CHECK(classify(embed_table(tw, 2, 2)) == GroupClass::V);
}
