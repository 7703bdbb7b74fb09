#include "vn/rational.hpp"

namespace vn {

Int ipow(int base, unsigned exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

Rational frac_part(const Rational& x) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational r = x - Rational(fl);
  r.canonicalize();
  return r;
}

bool in_unit_interval(const Rational& x) { return x >= 0 && x < 1; }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw Error("empty rational");
  auto slash = text.find('/');
  auto digits_ok = [](std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string_view num = text.substr(0, slash);
  if (!digits_ok(num)) throw Error("bad rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(Int(std::string(num)));
  std::string_view den = text.substr(slash + 1);
  if (!digits_ok(den) || den[0] == '-')
    throw Error("bad rational '" + std::string(text) + "'");
  Int d{std::string(den)};
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational r(Int{std::string(num)}, d);
  r.canonicalize();
  return r;
}

Rational parse_point(std::string_view text) {
  Rational x = parse_rational(text);
  if (!in_unit_interval(x))
    throw Error("point '" + std::string(text) + "' not in [0,1)");
  return x;
}

std::string rat_str(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string int_str(const Int& x) { return x.get_str(); }

}  // namespace vn
