#pragma once
#include <string>
#include <vector>

#include "vn/rational.hpp"
#include "vn/words.hpp"

namespace vn {

// The half-open interval [num/base^depth, (num+1)/base^depth).
struct NadicInterval {
  Int num;
  int depth = 0;
  int base = 0;

  Rational left() const;
  Rational right() const;
  bool contains(const Rational& x) const;
  std::string str() const;
  bool operator==(const NadicInterval&) const = default;
};

NadicInterval make_interval(Int num, int depth, int base);

// Word u of length k <-> interval of depth k whose left endpoint has digits
// u_i - 1 in base n.
NadicInterval to_interval(const Word& u, int base);
Word to_word(const NadicInterval& iv);

// Intervals ordered by left endpoint; pre: the words form a maximal code.
std::vector<NadicInterval> code_to_partition(const PrefixCode& code);

// Inverse direction; validates that the intervals tile [0, 1).
PrefixCode partition_to_code(const std::vector<NadicInterval>& parts);

// Checks the tiling property and reports every violation found.
std::vector<std::string> partition_gaps(std::vector<NadicInterval> parts);

}  // namespace vn
