#include "vn/intervals.hpp"

#include <algorithm>

namespace vn {

Rational NadicInterval::left() const {
  Rational r(num, ipow(base, depth));
  r.canonicalize();
  return r;
}

Rational NadicInterval::right() const {
  Rational r(num + 1, ipow(base, depth));
  r.canonicalize();
  return r;
}

bool NadicInterval::contains(const Rational& x) const {
  return x >= left() && x < right();
}

std::string NadicInterval::str() const {
  return "[" + rat_str(left()) + "," + rat_str(right()) + ")";
}

NadicInterval make_interval(Int num, int depth, int base) {
  if (base < 2) throw Error("alphabet size must be at least 2");
  if (depth < 0) throw Error("negative interval depth");
  if (num < 0 || num >= ipow(base, depth))
    throw Error("interval numerator " + int_str(num) + " out of range at depth " +
                std::to_string(depth));
  return NadicInterval{std::move(num), depth, base};
}

NadicInterval to_interval(const Word& u, int base) {
  Int num = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    int c = u[i];
    if (c < 1 || c > base) throw Error("letter out of range in " + u.str(base));
    num = num * base + (c - 1);
  }
  return NadicInterval{std::move(num), static_cast<int>(u.size()), base};
}

Word to_word(const NadicInterval& iv) {
  make_interval(iv.num, iv.depth, iv.base);
  std::vector<int> letters(iv.depth);
  Int rest = iv.num;
  for (int i = iv.depth - 1; i >= 0; --i) {
    Int digit = rest % iv.base;
    letters[i] = static_cast<int>(digit.get_si()) + 1;
    rest /= iv.base;
  }
  return Word(std::move(letters));
}

std::vector<NadicInterval> code_to_partition(const PrefixCode& code) {
  std::vector<NadicInterval> parts;
  parts.reserve(code.size());
  for (const Word& w : code.words()) parts.push_back(to_interval(w, code.base()));
  return parts;
}

std::vector<std::string> partition_gaps(std::vector<NadicInterval> parts) {
  std::vector<std::string> problems;
  if (parts.empty()) {
    problems.push_back("no intervals");
    return problems;
  }
  int base = parts[0].base;
  for (const auto& p : parts) {
    if (p.base != base) problems.push_back("mixed bases in partition");
    if (p.depth < 0 || p.num < 0 || p.num >= ipow(p.base, p.depth))
      problems.push_back("malformed interval " + p.str());
  }
  if (!problems.empty()) return problems;
  std::sort(parts.begin(), parts.end(),
            [](const NadicInterval& a, const NadicInterval& b) {
              return a.left() < b.left();
            });
  if (parts.front().left() != 0)
    problems.push_back("first interval starts at " + rat_str(parts.front().left()));
  for (size_t i = 0; i + 1 < parts.size(); ++i) {
    Rational r = parts[i].right(), l = parts[i + 1].left();
    if (r < l)
      problems.push_back("gap between " + parts[i].str() + " and " + parts[i + 1].str());
    else if (r > l)
      problems.push_back("overlap between " + parts[i].str() + " and " + parts[i + 1].str());
  }
  if (parts.back().right() != 1)
    problems.push_back("last interval ends at " + rat_str(parts.back().right()));
  return problems;
}

PrefixCode partition_to_code(const std::vector<NadicInterval>& parts) {
  auto problems = partition_gaps(parts);
  if (!problems.empty()) throw Error("not a partition of [0,1): " + problems.front());
  std::vector<Word> ws;
  ws.reserve(parts.size());
  for (const auto& p : parts) ws.push_back(to_word(p));
  return PrefixCode::unchecked(std::move(ws), parts[0].base);
}

}  // namespace vn
