#include "vn/tables.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "vn/rational.hpp"

namespace vn {

static std::vector<Word> column(const std::vector<std::pair<Word, Word>>& rows,
                                bool range) {
  std::vector<Word> ws;
  ws.reserve(rows.size());
  for (const auto& r : rows) ws.push_back(range ? r.first : r.second);
  return ws;
}

static void sort_by_domain(std::vector<std::pair<Word, Word>>& rows) {
  std::sort(rows.begin(), rows.end(),
            [](const auto& x, const auto& y) { return word_less(x.second, y.second); });
}

Table Table::validated(std::vector<std::pair<Word, Word>> rows, int base) {
  PrefixCode::validated(column(rows, true), base);
  PrefixCode::validated(column(rows, false), base);
  sort_by_domain(rows);
  return Table(base, std::move(rows));
}

Table Table::from_rows_unchecked(std::vector<std::pair<Word, Word>> rows, int base) {
  sort_by_domain(rows);
  return Table(base, std::move(rows));
}

Table Table::identity(int base) {
  if (base < 2) throw Error("alphabet size must be at least 2");
  return Table(base, {{Word(), Word()}});
}

PrefixCode Table::range_code() const {
  return PrefixCode::unchecked(column(rows_, true), base_);
}

PrefixCode Table::domain_code() const {
  return PrefixCode::unchecked(column(rows_, false), base_);
}

Table Table::parse(std::string_view text, int base) {
  std::string s(text);
  auto arrow = s.find("->");
  if (arrow == std::string::npos) throw Error("table text needs '->'");
  auto split = [&](const std::string& part) {
    std::vector<Word> ws;
    std::istringstream in(part);
    std::string tok;
    while (in >> tok) ws.push_back(Word::parse(tok, base));
    return ws;
  };
  std::vector<Word> as = split(s.substr(0, arrow));
  std::vector<Word> bs = split(s.substr(arrow + 2));
  if (as.empty() || as.size() != bs.size())
    throw Error("table text needs equally many words on both sides of '->'");
  std::vector<std::pair<Word, Word>> rows;
  for (size_t i = 0; i < as.size(); ++i) rows.push_back({as[i], bs[i]});
  return validated(std::move(rows), base);
}

std::string Table::str() const {
  std::string out;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ' ';
    out += rows_[i].first.str(base_);
  }
  out += " -> ";
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ' ';
    out += rows_[i].second.str(base_);
  }
  return out;
}

Table reduce(const Table& g) {
  std::vector<std::pair<Word, Word>> rows = g.rows();
  int n = g.base();
  bool merged = true;
  while (merged) {
    merged = false;
    // Families keyed by the stems: all n rows (a.j, b.j) present means the
    // split was cosmetic.
    std::map<std::pair<Word, Word>, std::vector<size_t>,
             bool (*)(const std::pair<Word, Word>&, const std::pair<Word, Word>&)>
        families(+[](const std::pair<Word, Word>& x, const std::pair<Word, Word>& y) {
          if (!(x.first == y.first)) return word_less(x.first, y.first);
          return word_less(x.second, y.second);
        });
    for (size_t i = 0; i < rows.size(); ++i) {
      const Word& a = rows[i].first;
      const Word& b = rows[i].second;
      if (!a.empty() && !b.empty() && a.last() == b.last())
        families[{a.parent(), b.parent()}].push_back(i);
    }
    for (const auto& [stems, members] : families) {
      if (static_cast<int>(members.size()) != n) continue;
      bool all_letters = true;
      std::vector<bool> seen(n + 1, false);
      for (size_t i : members) seen[rows[i].first.last()] = true;
      for (int j = 1; j <= n; ++j) all_letters = all_letters && seen[j];
      if (!all_letters) continue;
      std::vector<std::pair<Word, Word>> next;
      for (size_t i = 0; i < rows.size(); ++i)
        if (std::find(members.begin(), members.end(), i) == members.end())
          next.push_back(rows[i]);
      next.push_back(stems);
      rows = std::move(next);
      merged = true;
      break;
    }
  }
  return Table::from_rows_unchecked(std::move(rows), n);
}

Table compose(const Table& g, const Table& h) {
  if (g.base() != h.base()) throw Error("composing tables over different alphabets");
  PrefixCode h_range = h.range_code();
  PrefixCode g_domain = g.domain_code();
  Refinement r = common_refinement(h_range, g_domain);
  // Map refinement ancestors back to rows.
  std::map<Word, size_t, WordLess> h_by_range, g_by_domain;
  for (size_t i = 0; i < h.size(); ++i) h_by_range[h.range_word(i)] = i;
  for (size_t i = 0; i < g.size(); ++i) g_by_domain[g.domain_word(i)] = i;
  std::vector<std::pair<Word, Word>> rows;
  rows.reserve(r.code.size());
  for (size_t t = 0; t < r.code.size(); ++t) {
    const Word& c = r.code[t];
    const Word& ha = h_range[r.in_a[t]];
    const Word& gb = g_domain[r.in_b[t]];
    size_t hi = h_by_range.at(ha);
    size_t gi = g_by_domain.at(gb);
    Word u = suffix_after(ha, c);
    Word v = suffix_after(gb, c);
    rows.push_back({g.range_word(gi) + v, h.domain_word(hi) + u});
  }
  return reduce(Table::from_rows_unchecked(std::move(rows), g.base()));
}

Table invert(const Table& g) {
  std::vector<std::pair<Word, Word>> rows;
  rows.reserve(g.size());
  for (const auto& [a, b] : g.rows()) rows.push_back({b, a});
  return reduce(Table::from_rows_unchecked(std::move(rows), g.base()));
}

bool equal(const Table& g, const Table& h) {
  if (g.base() != h.base()) return false;
  return reduce(g) == reduce(h);
}

GroupClass classify(const Table& g) {
  Table r = reduce(g);
  size_t m = r.size();
  if (m == 1) return GroupClass::F;
  // Rows are sorted by b; count descents of the a column around the cycle.
  int linear = 0;
  for (size_t i = 0; i + 1 < m; ++i)
    if (word_less(r.range_word(i + 1), r.range_word(i))) ++linear;
  if (linear == 0) return GroupClass::F;
  int cyclic = linear + (word_less(r.range_word(0), r.range_word(m - 1)) ? 1 : 0);
  return cyclic == 1 ? GroupClass::T : GroupClass::V;
}

std::string class_str(GroupClass c) {
  switch (c) {
    case GroupClass::F: return "F";
    case GroupClass::T: return "T";
    default: return "V";
  }
}

// Stable across standard libraries, unlike uniform_int_distribution.
static std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

static PrefixCode grow_code(int base, int max_depth, unsigned splits,
                            std::mt19937_64& rng) {
  PrefixCode code = PrefixCode::level_one(base);
  for (unsigned s = 0; s < splits; ++s) {
    std::vector<size_t> shallow;
    for (size_t i = 0; i < code.size(); ++i)
      if (static_cast<int>(code[i].size()) < max_depth) shallow.push_back(i);
    code = expand(code, code[shallow[bounded(rng, shallow.size())]]);
  }
  return code;
}

Table random_table(int base, int max_depth, std::uint64_t seed) {
  if (base < 2) throw Error("alphabet size must be at least 2");
  if (max_depth < 1) throw Error("max_depth must be at least 1");
  std::mt19937_64 rng(seed);
  // Leaves strictly deeper than level 1 are capped by max_depth; both codes
  // take the same number of splits so they stay the same size.
  Int capacity = (ipow(base, max_depth) - base) / (base - 1);
  std::uint64_t cap = capacity > 64 ? 64 : capacity.get_ui();
  unsigned splits = static_cast<unsigned>(bounded(rng, cap + 1));
  PrefixCode range = grow_code(base, max_depth, splits, rng);
  PrefixCode domain = grow_code(base, max_depth, splits, rng);
  std::vector<size_t> perm(range.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  for (size_t i = perm.size(); i > 1; --i)
    std::swap(perm[i - 1], perm[bounded(rng, i)]);
  std::vector<std::pair<Word, Word>> rows;
  for (size_t i = 0; i < domain.size(); ++i)
    rows.push_back({range[perm[i]], domain[i]});
  return Table::from_rows_unchecked(std::move(rows), base);
}

}  // namespace vn
