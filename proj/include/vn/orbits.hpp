#pragma once
#include <vector>

#include "vn/rational.hpp"

namespace vn {

// Dynamics of x -> base * x mod 1 on exact rationals in [0, 1). Every
// rational is eventually periodic under it.
Rational forward(const Rational& x, int base);

// The base preimages (x + i)/base, i = 0..base-1, in increasing order.
std::vector<Rational> preimages(const Rational& x, int base);

struct OrbitCycle {
  std::vector<Rational> preperiod;  // x, f(x), ... before the cycle
  std::vector<Rational> cycle;      // starts at the first repeated point
};
OrbitCycle cycle_of(const Rational& x, int base);

// Same full (forward and backward) orbit; equivalently the same cycle.
bool equivalent(const Rational& x, const Rational& y, int base);

// Forward closure of x plus `depth` rounds of preimages of everything found
// so far; sorted ascending. Grows like base^depth.
std::vector<Rational> enumerate_orbit(const Rational& x, int base, int depth);

}  // namespace vn
