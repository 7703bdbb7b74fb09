#pragma once
#include <string>
#include <vector>

#include "vn/intervals.hpp"
#include "vn/tables.hpp"

namespace vn {

// One affine piece: dom maps onto ran with slope base^(dom.depth - ran.depth).
struct PLPiece {
  NadicInterval dom;
  NadicInterval ran;
  bool operator==(const PLPiece&) const = default;
};

// Right-continuous piecewise-linear bijection of [0, 1) with n-adic breaks
// and power-of-n slopes; pieces sorted by the left endpoint of dom.
struct PLMap {
  int base = 0;
  std::vector<PLPiece> pieces;
  bool operator==(const PLMap&) const = default;
};

// Row (a_i, b_i) becomes the piece sending interval(b_i) onto interval(a_i).
PLMap table_to_plmap(const Table& g);

Rational evaluate(const PLMap& m, const Rational& x);  // pre: x in [0,1)

// Inverse of table_to_plmap; throws if the pieces fail the shape checks.
Table plmap_to_table(const PLMap& m);

struct ShapeReport {
  bool ok = true;
  std::vector<std::string> problems;
};
// Domains tile [0,1), ranges tile [0,1), every piece well-formed.
ShapeReport check_vtf_conditions(const PLMap& m);

// Breakpoints where the map fails to glue continuously (as a circle map the
// count is taken cyclically, including the wrap at 0 ~ 1).
int discontinuity_count(const PLMap& m);

std::string plmap_str(const PLMap& m);

}  // namespace vn
