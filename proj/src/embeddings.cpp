#include "vn/embeddings.hpp"

namespace vn {

static void check_params(int n, int k) {
  if (n < 2) throw Error("target alphabet size must be at least 2");
  if (k < 1) throw Error("depth parameter must be at least 1");
}

int source_base(int n, int k) {
  check_params(n, k);
  return k * (n - 1) + 1;
}

Word gamma(int y, int n, int k) {
  int m = source_base(n, k);
  if (y < 1 || y > m)
    throw Error("letter " + std::to_string(y) + " out of range 1.." + std::to_string(m));
  if (y == 1) return Word::repeated(1, k);
  int i = (y - 2) / (n - 1) + 1;
  int j = (y - 2) % (n - 1) + 2;
  return Word::repeated(1, k - i).appended(j);
}

Word f_morphism(const Word& u, int n, int k) {
  check_params(n, k);
  std::vector<int> letters;
  for (int y : u.letters()) {
    Word g = gamma(y, n, k);
    letters.insert(letters.end(), g.letters().begin(), g.letters().end());
  }
  return Word(std::move(letters));
}

CuntzSum iota_monomial(const CuntzMonomial& t, int n, int k) {
  return CuntzSum::monomial(n, t.coeff, f_morphism(t.a, n, k), f_morphism(t.b, n, k));
}

CuntzSum iota_sum(const CuntzSum& s, int n, int k) {
  if (s.base() != source_base(n, k))
    throw Error("sum alphabet does not match the embedding source");
  std::vector<CuntzMonomial> out;
  out.reserve(s.terms().size());
  for (const CuntzMonomial& t : s.terms())
    out.push_back({t.coeff, f_morphism(t.a, n, k), f_morphism(t.b, n, k)});
  return CuntzSum::from_terms(n, std::move(out));
}

Table embed_table(const Table& g, int n, int k) {
  if (g.base() != source_base(n, k))
    throw Error("table alphabet does not match the embedding source");
  std::vector<std::pair<Word, Word>> rows;
  rows.reserve(g.size());
  for (const auto& [a, b] : g.rows())
    rows.push_back({f_morphism(a, n, k), f_morphism(b, n, k)});
  // Validation doubles as a safety net: the image rows must again form two
  // maximal codes.
  return reduce(Table::validated(std::move(rows), n));
}

}  // namespace vn
