#include "vn/orbits.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace vn {

static void check_point(const Rational& x) {
  if (!in_unit_interval(x)) throw Error("point " + rat_str(x) + " not in [0,1)");
}

Rational forward(const Rational& x, int base) {
  check_point(x);
  return frac_part(base * x);
}

std::vector<Rational> preimages(const Rational& x, int base) {
  check_point(x);
  std::vector<Rational> out;
  out.reserve(base);
  for (int i = 0; i < base; ++i) {
    Rational p = (x + i) / base;
    p.canonicalize();
    out.push_back(std::move(p));
  }
  return out;
}

OrbitCycle cycle_of(const Rational& x, int base) {
  check_point(x);
  std::vector<Rational> seen;
  std::map<Rational, size_t> at;
  Rational cur = x;
  while (!at.count(cur)) {
    at[cur] = seen.size();
    seen.push_back(cur);
    cur = forward(cur, base);
  }
  size_t entry = at[cur];
  OrbitCycle oc;
  oc.preperiod.assign(seen.begin(), seen.begin() + entry);
  oc.cycle.assign(seen.begin() + entry, seen.end());
  return oc;
}

bool equivalent(const Rational& x, const Rational& y, int base) {
  std::vector<Rational> cx = cycle_of(x, base).cycle;
  std::vector<Rational> cy = cycle_of(y, base).cycle;
  if (cx.size() != cy.size()) return false;
  // Cycles of the same map are equal or disjoint, so one membership test
  // would do; compare the sorted lists anyway.
  std::sort(cx.begin(), cx.end());
  std::sort(cy.begin(), cy.end());
  return cx == cy;
}

std::vector<Rational> enumerate_orbit(const Rational& x, int base, int depth) {
  if (depth < 0) throw Error("negative orbit depth");
  OrbitCycle oc = cycle_of(x, base);
  std::set<Rational> pool(oc.preperiod.begin(), oc.preperiod.end());
  pool.insert(oc.cycle.begin(), oc.cycle.end());
  std::vector<Rational> frontier(pool.begin(), pool.end());
  for (int level = 0; level < depth; ++level) {
    std::vector<Rational> next;
    for (const Rational& p : frontier)
      for (Rational& q : preimages(p, base))
        if (pool.insert(q).second) next.push_back(std::move(q));
    frontier = std::move(next);
  }
  return {pool.begin(), pool.end()};
}

}  // namespace vn
