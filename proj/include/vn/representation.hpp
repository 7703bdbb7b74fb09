#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vn/cuntz.hpp"
#include "vn/embeddings.hpp"
#include "vn/orbits.hpp"
#include "vn/plmaps.hpp"
#include "vn/rational.hpp"
#include "vn/tables.hpp"

namespace vn {

// Finite rational linear combination of basis vectors delta_y, y in [0, 1).
class FormalVector {
 public:
  explicit FormalVector(int base);
  static FormalVector unit(int base, const Rational& y);

  int base() const { return base_; }
  bool is_zero() const { return entries_.empty(); }
  const std::map<Rational, Rational>& entries() const { return entries_; }
  void add(const Rational& point, const Rational& coeff);
  // The y with v = delta_y, when the vector is exactly one unit vector.
  std::optional<Rational> as_unit() const;
  std::string str() const;
  bool operator==(const FormalVector&) const = default;

 private:
  int base_ = 0;
  std::map<Rational, Rational> entries_;
};

// S_i delta_y = delta_{(y+i-1)/n}; S_i^* delta_y = delta_{n.y-(i-1)} when y
// lies in [(i-1)/n, i/n) and 0 otherwise. Extended linearly.
FormalVector apply_generator(int i, const FormalVector& v);
FormalVector apply_generator_adjoint(int i, const FormalVector& v);

// S_u and S_u^* in closed form: scale into / out of the subinterval of u.
FormalVector apply_word(const Word& u, const FormalVector& v);
FormalVector apply_word_adjoint(const Word& u, const FormalVector& v);

FormalVector apply_sum(const CuntzSum& s, const FormalVector& v);

// g as a map on points of [0, 1).
Rational act(const Table& g, const Rational& y);

// psi(g) applied to delta_y must be exactly delta_{g(y)}.
bool check_action_consistency(const Table& g, const Rational& y);

// One move through the orbit graph of the times-base map: forward applies
// the map (consuming `digit`), backward picks the preimage with that digit.
struct OrbitStep {
  bool forward;
  int digit;  // backward goes to (point + digit - 1)/base
  bool operator==(const OrbitStep&) const = default;
};

// Shortest path x -> y; throws when the points lie in different orbits or
// the path would exceed max_steps.
std::vector<OrbitStep> orbit_path(const Rational& x, const Rational& y, int base,
                                  int max_steps);

// Follow a path in the base-m graph (m = k(n-1)+1) starting at x while
// mirroring every step through gamma in base n; returns the final base-n
// point. Throws if a mirrored forward step annihilates the vector (the
// current base-n point lies outside the gamma subinterval being consumed).
Rational transport_along(const std::vector<OrbitStep>& path, const Rational& x,
                         int n, int k);

// Tie-break between equal-length transportable paths: the search that
// prefers forward edges keeps the longest forward prefix, the other one the
// shortest. On every input where all shortest paths survive transport the
// two agree with a plain breadth-first search in the orbit graph.
enum class PathOrder { forward_first, backward_first };

// Shortest x -> y path whose mirrored transport stays nonzero. Forward
// steps consume a gamma block from the front of the carried base-n point
// and die when it does not match, so the route may have to take the long
// way around the cycle; backward steps always survive.
std::vector<OrbitStep> u_path(const Rational& y, const Rational& x, int n, int k,
                              int max_steps = 256,
                              PathOrder order = PathOrder::forward_first);

// Where the intertwiner anchored at x sends delta_y.
Rational u_image(const Rational& y, const Rational& x, int n, int k,
                 int max_steps = 256);

// {u_image(y) : y in enumerate_orbit(x, m, depth)}, sorted, deduplicated.
// Distinct y can collide when the anchor's base-n digits disagree with the
// gamma recoding of its base-m itinerary, so the set may be smaller than
// the orbit.
std::vector<Rational> orbit_prime(const Rational& x, int n, int k, int depth,
                                  int max_steps = 256);

// U g = E(g) U on delta_y for every y in the sampled orbit of x.
bool check_intertwine(const Table& g, const Rational& x, int n, int k, int depth,
                      int max_steps = 256);

struct MatrixEntry {
  size_t row = 0, col = 0;
  Rational coeff;
  bool operator==(const MatrixEntry&) const = default;
};
struct OverflowEntry {
  Rational from, to;
  Rational coeff;
  bool operator==(const OverflowEntry&) const = default;
};
// Column j expands s . delta_{basis[j]}; anything landing outside the basis
// is kept in overflow rather than dropped.
struct MatrixSection {
  std::vector<Rational> basis;
  std::vector<MatrixEntry> entries;
  std::vector<OverflowEntry> overflow;
  bool operator==(const MatrixSection&) const = default;
};
// Columns are independent; `parallel` fans them out across threads and the
// assembly order keeps the output identical to the serial run.
MatrixSection matrix_section(const CuntzSum& s, std::vector<Rational> basis,
                             bool parallel = false);

}  // namespace vn
