#include "vn/cuntz.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace vn {

static bool term_less(const CuntzMonomial& x, const CuntzMonomial& y) {
  if (!(x.a == y.a)) return word_less(x.a, y.a);
  return word_less(x.b, y.b);
}

static void check_letters(const Word& w, int base) {
  for (int c : w.letters())
    if (c < 1 || c > base)
      throw Error("letter " + std::to_string(c) + " out of range 1.." +
                  std::to_string(base));
}

CuntzSum::CuntzSum(int base) : base_(base) {
  if (base < 2) throw Error("alphabet size must be at least 2");
}

CuntzSum CuntzSum::identity(int base) {
  return monomial(base, 1, Word(), Word());
}

CuntzSum CuntzSum::monomial(int base, Rational coeff, Word a, Word b) {
  return from_terms(base, {{std::move(coeff), std::move(a), std::move(b)}});
}

CuntzSum CuntzSum::from_terms(int base, std::vector<CuntzMonomial> terms) {
  CuntzSum s(base);
  for (const CuntzMonomial& t : terms) {
    check_letters(t.a, base);
    check_letters(t.b, base);
  }
  // Combine like terms.
  std::map<std::pair<Word, Word>, Rational,
           bool (*)(const std::pair<Word, Word>&, const std::pair<Word, Word>&)>
      combined(+[](const std::pair<Word, Word>& x, const std::pair<Word, Word>& y) {
        if (!(x.first == y.first)) return word_less(x.first, y.first);
        return word_less(x.second, y.second);
      });
  for (CuntzMonomial& t : terms) {
    auto [it, fresh] = combined.try_emplace({std::move(t.a), std::move(t.b)}, t.coeff);
    if (!fresh) it->second += t.coeff;
  }
  // Collapse complete sibling families with one shared coefficient; repeat
  // until stable. Each pass shrinks the sum, so this terminates.
  bool merged = true;
  while (merged) {
    merged = false;
    for (auto it = combined.begin(); it != combined.end(); ++it) {
      const Word& a = it->first.first;
      const Word& b = it->first.second;
      if (a.empty() || b.empty() || a.last() != b.last()) continue;
      Word sa = a.parent(), sb = b.parent();
      bool family = true;
      for (int j = 1; j <= base && family; ++j) {
        auto jt = combined.find({sa.appended(j), sb.appended(j)});
        family = jt != combined.end() && jt->second == it->second;
      }
      if (!family) continue;
      Rational c = it->second;
      for (int j = 1; j <= base; ++j) combined.erase({sa.appended(j), sb.appended(j)});
      auto [st, fresh] = combined.try_emplace({std::move(sa), std::move(sb)}, c);
      if (!fresh) st->second += c;
      merged = true;
      break;
    }
  }
  for (auto& [words, coeff] : combined)
    if (coeff != 0) s.terms_.push_back({coeff, words.first, words.second});
  std::sort(s.terms_.begin(), s.terms_.end(), term_less);
  return s;
}

std::optional<CuntzMonomial> multiply(const CuntzMonomial& m1, const CuntzMonomial& m2) {
  // S^*_b S_c: either c = b.z (leaving S_z) or b = c.z (leaving S^*_z).
  if (is_prefix(m1.b, m2.a)) {
    Word z = suffix_after(m1.b, m2.a);
    return CuntzMonomial{m1.coeff * m2.coeff, m1.a + z, m2.b};
  }
  if (is_prefix(m2.a, m1.b)) {
    Word z = suffix_after(m2.a, m1.b);
    return CuntzMonomial{m1.coeff * m2.coeff, m1.a, m2.b + z};
  }
  return std::nullopt;
}

CuntzSum multiply_sums(const CuntzSum& s1, const CuntzSum& s2) {
  if (s1.base() != s2.base()) throw Error("multiplying sums over different alphabets");
  std::vector<CuntzMonomial> out;
  for (const CuntzMonomial& t1 : s1.terms())
    for (const CuntzMonomial& t2 : s2.terms())
      if (auto p = multiply(t1, t2)) out.push_back(std::move(*p));
  return CuntzSum::from_terms(s1.base(), std::move(out));
}

CuntzSum add(const CuntzSum& s1, const CuntzSum& s2) {
  if (s1.base() != s2.base()) throw Error("adding sums over different alphabets");
  std::vector<CuntzMonomial> out = s1.terms();
  out.insert(out.end(), s2.terms().begin(), s2.terms().end());
  return CuntzSum::from_terms(s1.base(), std::move(out));
}

CuntzSum scale(const Rational& c, const CuntzSum& s) {
  std::vector<CuntzMonomial> out = s.terms();
  for (CuntzMonomial& t : out) t.coeff *= c;
  return CuntzSum::from_terms(s.base(), std::move(out));
}

CuntzSum adjoint(const CuntzSum& s) {
  std::vector<CuntzMonomial> out;
  out.reserve(s.terms().size());
  for (const CuntzMonomial& t : s.terms()) out.push_back({t.coeff, t.b, t.a});
  return CuntzSum::from_terms(s.base(), std::move(out));
}

CuntzSum normalize(const CuntzSum& s) {
  return CuntzSum::from_terms(s.base(), s.terms());
}

bool is_identity(const CuntzSum& s) {
  return s.terms().size() == 1 && s.terms()[0].coeff == 1 &&
         s.terms()[0].a.empty() && s.terms()[0].b.empty();
}

CuntzSum psi(const Table& g) {
  std::vector<CuntzMonomial> terms;
  terms.reserve(g.size());
  for (const auto& [a, b] : g.rows()) terms.push_back({Rational(1), a, b});
  return CuntzSum::from_terms(g.base(), std::move(terms));
}

std::string CuntzSum::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const CuntzMonomial& t = terms_[i];
    if (i) out += " + ";
    std::string ops;
    if (!t.a.empty()) ops += "S[" + t.a.str(base_) + "]";
    if (!t.b.empty()) ops += "S*[" + t.b.str(base_) + "]";
    if (ops.empty()) {
      out += rat_str(t.coeff);
    } else {
      if (t.coeff != 1) out += rat_str(t.coeff) + "*";
      out += ops;
    }
  }
  return out;
}

CuntzSum CuntzSum::parse(std::string_view text, int base) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  std::string_view body = trim(text);
  if (body.empty()) throw Error("empty sum");
  if (body == "0") return CuntzSum(base);
  std::vector<CuntzMonomial> terms;
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t plus = body.find(" + ", pos);
    std::string_view piece = trim(body.substr(
        pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos));
    if (piece.empty()) throw Error("empty term in sum");
    CuntzMonomial t{Rational(1), Word(), Word()};
    size_t star = piece.find("S*[");
    size_t plain = piece.find("S[");
    size_t first_op = std::min(star, plain);
    if (first_op == std::string_view::npos) {
      t.coeff = parse_rational(piece);
    } else {
      std::string_view head = trim(piece.substr(0, first_op));
      if (!head.empty()) {
        if (head.back() == '*') head = trim(head.substr(0, head.size() - 1));
        if (head.empty()) throw Error("dangling '*' in term");
        t.coeff = parse_rational(head);
      }
      std::string_view rest = piece.substr(first_op);
      auto take_bracket = [&](size_t open) {
        size_t close = rest.find(']', open);
        if (close == std::string_view::npos) throw Error("unclosed '[' in term");
        Word w = Word::parse(rest.substr(open + 1, close - open - 1), base);
        rest = trim(rest.substr(close + 1));
        return w;
      };
      if (rest.rfind("S[", 0) == 0) t.a = take_bracket(1);
      if (rest.rfind("S*[", 0) == 0) t.b = take_bracket(2);
      if (!rest.empty()) throw Error("trailing text in term: '" + std::string(rest) + "'");
    }
    terms.push_back(std::move(t));
    if (plus == std::string_view::npos) break;
    pos = plus + 3;
  }
  return from_terms(base, std::move(terms));
}

}  // namespace vn
