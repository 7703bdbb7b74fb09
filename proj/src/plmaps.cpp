#include "vn/plmaps.hpp"

#include <algorithm>

namespace vn {

static std::vector<PLPiece> sorted_by_dom(std::vector<PLPiece> ps) {
  std::sort(ps.begin(), ps.end(), [](const PLPiece& a, const PLPiece& b) {
    return a.dom.left() < b.dom.left();
  });
  return ps;
}

PLMap table_to_plmap(const Table& g) {
  PLMap m{g.base(), {}};
  m.pieces.reserve(g.size());
  for (const auto& [a, b] : g.rows())
    m.pieces.push_back({to_interval(b, g.base()), to_interval(a, g.base())});
  m.pieces = sorted_by_dom(std::move(m.pieces));
  return m;
}

static Rational piece_value(const PLPiece& p, int base, const Rational& x) {
  Rational slope(ipow(base, p.dom.depth), ipow(base, p.ran.depth));
  slope.canonicalize();
  Rational y = p.ran.left() + slope * (x - p.dom.left());
  y.canonicalize();
  return y;
}

Rational evaluate(const PLMap& m, const Rational& x) {
  if (!in_unit_interval(x)) throw Error("evaluate: point " + rat_str(x) + " not in [0,1)");
  for (const PLPiece& p : m.pieces)
    if (p.dom.contains(x)) return piece_value(p, m.base, x);
  throw Error("evaluate: no piece covers " + rat_str(x));
}

ShapeReport check_vtf_conditions(const PLMap& m) {
  ShapeReport rep;
  if (m.base < 2) {
    rep.problems.push_back("alphabet size must be at least 2");
    rep.ok = false;
    return rep;
  }
  if (m.pieces.empty()) rep.problems.push_back("no pieces");
  std::vector<NadicInterval> doms, rans;
  for (const PLPiece& p : m.pieces) {
    if (p.dom.base != m.base || p.ran.base != m.base)
      rep.problems.push_back("piece base differs from map base");
    doms.push_back(p.dom);
    rans.push_back(p.ran);
  }
  if (rep.problems.empty()) {
    for (const std::string& s : partition_gaps(doms))
      rep.problems.push_back("domain: " + s);
    for (const std::string& s : partition_gaps(rans))
      rep.problems.push_back("range: " + s);
  }
  rep.ok = rep.problems.empty();
  return rep;
}

Table plmap_to_table(const PLMap& m) {
  ShapeReport rep = check_vtf_conditions(m);
  if (!rep.ok) throw Error("not a valid map: " + rep.problems.front());
  std::vector<std::pair<Word, Word>> rows;
  rows.reserve(m.pieces.size());
  for (const PLPiece& p : m.pieces) rows.push_back({to_word(p.ran), to_word(p.dom)});
  return Table::validated(std::move(rows), m.base);
}

int discontinuity_count(const PLMap& m) {
  std::vector<PLPiece> ps = sorted_by_dom(m.pieces);
  int count = 0;
  for (size_t i = 0; i < ps.size(); ++i) {
    const PLPiece& cur = ps[i];
    const PLPiece& next = ps[(i + 1) % ps.size()];
    Rational limit = cur.ran.right();
    if (limit == 1) limit = 0;  // as a circle map
    if (limit != next.ran.left()) ++count;
  }
  return count;
}

std::string plmap_str(const PLMap& m) {
  std::string out;
  for (size_t i = 0; i < m.pieces.size(); ++i) {
    if (i) out += "  ";
    out += m.pieces[i].dom.str() + "->" + m.pieces[i].ran.str();
  }
  return out;
}

}  // namespace vn
