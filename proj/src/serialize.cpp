#include "vn/serialize.hpp"

#include <json.hpp>

namespace vn {

using nlohmann::json;

static json parsed(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("malformed JSON");
  return j;
}

static int base_field(const json& j) {
  if (!j.contains("base") || !j["base"].is_number_integer())
    throw Error("missing integer field 'base'");
  return j["base"].get<int>();
}

// Numerators can exceed any machine integer; emit a number while it fits
// and a decimal string beyond that. Accept both on input.
static json int_out(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

static Int int_in(const json& j, const char* field) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw Error(std::string("field '") + field + "' must be an integer or string");
}

std::string table_to_json(const Table& t) {
  json rows = json::array();
  for (const auto& [a, b] : t.rows())
    rows.push_back({{"a", a.str(t.base())}, {"b", b.str(t.base())}});
  return json{{"base", t.base()}, {"rows", rows}}.dump();
}

Table table_from_json(const std::string& text) {
  json j = parsed(text);
  int base = base_field(j);
  if (!j.contains("rows") || !j["rows"].is_array()) throw Error("missing array 'rows'");
  std::vector<std::pair<Word, Word>> rows;
  for (const json& r : j["rows"]) {
    if (!r.contains("a") || !r.contains("b"))
      throw Error("row needs string fields 'a' and 'b'");
    rows.push_back({Word::parse(r["a"].get<std::string>(), base),
                    Word::parse(r["b"].get<std::string>(), base)});
  }
  return Table::validated(std::move(rows), base);
}

static json interval_obj(const NadicInterval& iv) {
  return json{{"num", int_out(iv.num)}, {"depth", iv.depth}, {"base", iv.base}};
}

static NadicInterval interval_in(const json& j) {
  if (!j.contains("num") || !j.contains("depth") || !j.contains("base"))
    throw Error("interval needs fields 'num', 'depth', 'base'");
  return make_interval(int_in(j["num"], "num"), j["depth"].get<int>(),
                       j["base"].get<int>());
}

std::string interval_to_json(const NadicInterval& iv) { return interval_obj(iv).dump(); }

NadicInterval interval_from_json(const std::string& text) {
  return interval_in(parsed(text));
}

std::string plmap_to_json(const PLMap& m) {
  json pieces = json::array();
  for (const PLPiece& p : m.pieces)
    pieces.push_back({{"dom", interval_obj(p.dom)}, {"ran", interval_obj(p.ran)}});
  return json{{"base", m.base}, {"pieces", pieces}}.dump();
}

PLMap plmap_from_json(const std::string& text) {
  json j = parsed(text);
  PLMap m{base_field(j), {}};
  if (!j.contains("pieces") || !j["pieces"].is_array())
    throw Error("missing array 'pieces'");
  for (const json& p : j["pieces"]) {
    if (!p.contains("dom") || !p.contains("ran"))
      throw Error("piece needs fields 'dom' and 'ran'");
    m.pieces.push_back({interval_in(p["dom"]), interval_in(p["ran"])});
  }
  return m;
}

std::string sum_to_json(const CuntzSum& s) {
  json terms = json::array();
  for (const CuntzMonomial& t : s.terms())
    terms.push_back({{"coeff", rat_str(t.coeff)},
                     {"a", t.a.str(s.base())},
                     {"b", t.b.str(s.base())}});
  return json{{"base", s.base()}, {"terms", terms}}.dump();
}

CuntzSum sum_from_json(const std::string& text) {
  json j = parsed(text);
  int base = base_field(j);
  if (!j.contains("terms") || !j["terms"].is_array()) throw Error("missing array 'terms'");
  std::vector<CuntzMonomial> terms;
  for (const json& t : j["terms"]) {
    if (!t.contains("coeff") || !t.contains("a") || !t.contains("b"))
      throw Error("term needs fields 'coeff', 'a', 'b'");
    terms.push_back({parse_rational(t["coeff"].get<std::string>()),
                     Word::parse(t["a"].get<std::string>(), base),
                     Word::parse(t["b"].get<std::string>(), base)});
  }
  return CuntzSum::from_terms(base, std::move(terms));
}

std::string matrix_to_json(const MatrixSection& m) {
  json basis = json::array();
  for (const Rational& p : m.basis) basis.push_back(rat_str(p));
  json entries = json::array();
  for (const MatrixEntry& e : m.entries)
    entries.push_back({e.row, e.col, rat_str(e.coeff)});
  json overflow = json::array();
  for (const OverflowEntry& e : m.overflow)
    overflow.push_back({{"from", rat_str(e.from)},
                        {"to", rat_str(e.to)},
                        {"coeff", rat_str(e.coeff)}});
  return json{{"basis", basis}, {"entries", entries}, {"overflow", overflow}}.dump();
}

std::string points_to_json(const std::vector<Rational>& pts) {
  json arr = json::array();
  for (const Rational& p : pts) arr.push_back(rat_str(p));
  return arr.dump();
}

}  // namespace vn
