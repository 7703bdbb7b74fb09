#pragma once
#include <gmpxx.h>

#include <string>
#include <string_view>

#include "vn/error.hpp"

namespace vn {

// Exact arithmetic throughout; mpq_class keeps values canonical (lowest
// terms, positive denominator) after every operation.
using Int = mpz_class;
using Rational = mpq_class;

Int ipow(int base, unsigned exp);

// x - floor(x), always in [0, 1).
Rational frac_part(const Rational& x);

bool in_unit_interval(const Rational& x);  // 0 <= x < 1

// "p/q" or "p", optional leading '-'. Throws on malformed input or q = 0.
Rational parse_rational(std::string_view text);

// parse_rational plus the range check for points of [0, 1).
Rational parse_point(std::string_view text);

// "p/q", or just "p" for integers.
std::string rat_str(const Rational& x);

std::string int_str(const Int& x);

}  // namespace vn
