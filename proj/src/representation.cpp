#include "vn/representation.hpp"

#include <algorithm>

#include "vn/intervals.hpp"

namespace vn {

FormalVector::FormalVector(int base) : base_(base) {
  if (base < 2) throw Error("alphabet size must be at least 2");
}

FormalVector FormalVector::unit(int base, const Rational& y) {
  if (!in_unit_interval(y)) throw Error("point " + rat_str(y) + " not in [0,1)");
  FormalVector v(base);
  v.entries_[y] = 1;
  return v;
}

void FormalVector::add(const Rational& point, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = entries_.try_emplace(point, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) entries_.erase(it);
  }
}

std::optional<Rational> FormalVector::as_unit() const {
  if (entries_.size() == 1 && entries_.begin()->second == 1)
    return entries_.begin()->first;
  return std::nullopt;
}

std::string FormalVector::str() const {
  if (entries_.empty()) return "0";
  std::string out;
  for (const auto& [point, coeff] : entries_) {
    if (!out.empty()) out += " + ";
    if (coeff != 1) out += rat_str(coeff) + "*";
    out += "d[" + rat_str(point) + "]";
  }
  return out;
}

static void check_digit(int i, int base) {
  if (i < 1 || i > base)
    throw Error("generator index " + std::to_string(i) + " out of range 1.." +
                std::to_string(base));
}

FormalVector apply_generator(int i, const FormalVector& v) {
  check_digit(i, v.base());
  FormalVector out(v.base());
  for (const auto& [y, c] : v.entries()) {
    Rational p = (y + (i - 1)) / v.base();
    p.canonicalize();
    out.add(p, c);
  }
  return out;
}

FormalVector apply_generator_adjoint(int i, const FormalVector& v) {
  check_digit(i, v.base());
  FormalVector out(v.base());
  Rational lo(i - 1, v.base()), hi(i, v.base());
  lo.canonicalize();
  hi.canonicalize();
  for (const auto& [y, c] : v.entries()) {
    if (y < lo || y >= hi) continue;
    Rational p = y * v.base() - (i - 1);
    p.canonicalize();
    out.add(p, c);
  }
  return out;
}

FormalVector apply_word(const Word& u, const FormalVector& v) {
  NadicInterval iv = to_interval(u, v.base());
  Int scale = ipow(v.base(), u.size());
  Rational left = iv.left();
  FormalVector out(v.base());
  for (const auto& [y, c] : v.entries()) {
    Rational p = y / scale + left;
    p.canonicalize();
    out.add(p, c);
  }
  return out;
}

FormalVector apply_word_adjoint(const Word& u, const FormalVector& v) {
  NadicInterval iv = to_interval(u, v.base());
  Int scale = ipow(v.base(), u.size());
  Rational left = iv.left();
  FormalVector out(v.base());
  for (const auto& [y, c] : v.entries()) {
    if (!iv.contains(y)) continue;
    Rational p = (y - left) * scale;
    p.canonicalize();
    out.add(p, c);
  }
  return out;
}

FormalVector apply_sum(const CuntzSum& s, const FormalVector& v) {
  if (s.base() != v.base()) throw Error("sum and vector over different alphabets");
  FormalVector out(v.base());
  for (const CuntzMonomial& t : s.terms()) {
    FormalVector w = apply_word(t.a, apply_word_adjoint(t.b, v));
    for (const auto& [y, c] : w.entries()) out.add(y, t.coeff * c);
  }
  return out;
}

Rational act(const Table& g, const Rational& y) {
  return evaluate(table_to_plmap(g), y);
}

bool check_action_consistency(const Table& g, const Rational& y) {
  FormalVector lhs = apply_sum(psi(g), FormalVector::unit(g.base(), y));
  return lhs == FormalVector::unit(g.base(), act(g, y));
}

static int subinterval_digit(const Rational& z, int base) {
  Rational mz = z * base;
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), mz.get_num_mpz_t(), mz.get_den_mpz_t());
  return static_cast<int>(q.get_si()) + 1;
}

static int backward_digit(const Rational& from, const Rational& to, int base) {
  // to = (from + digit - 1)/base
  Rational d = to * base - from + 1;
  d.canonicalize();
  if (d.get_den() != 1 || d < 1 || d > base)
    throw Error("internal: not an orbit edge " + rat_str(from) + " <- " + rat_str(to));
  return static_cast<int>(d.get_num().get_si());
}

std::vector<OrbitStep> orbit_path(const Rational& x, const Rational& y, int base,
                                  int max_steps) {
  OrbitCycle ox = cycle_of(x, base);
  OrbitCycle oy = cycle_of(y, base);
  {
    std::vector<Rational> cx = ox.cycle, cy = oy.cycle;
    std::sort(cx.begin(), cx.end());
    std::sort(cy.begin(), cy.end());
    if (!(cx == cy))
      throw Error("points " + rat_str(x) + " and " + rat_str(y) +
                  " lie in different orbits");
  }
  // The orbit graph is a set of trees hanging off one cycle, so a shortest
  // path is: forward along the chain of x to the first point the chain of y
  // passes through (possibly part way around the cycle, whichever direction
  // is shorter), then backward along the chain of y.
  std::vector<Rational> chain_x = ox.preperiod;
  chain_x.insert(chain_x.end(), ox.cycle.begin(), ox.cycle.end());
  std::map<Rational, size_t> pos_x;
  for (size_t i = 0; i < chain_x.size(); ++i) pos_x.emplace(chain_x[i], i);

  std::vector<Rational> chain_y = oy.preperiod;
  chain_y.push_back(oy.cycle.front());
  size_t t = 0;
  while (!pos_x.count(chain_y[t])) ++t;  // meets the shared cycle at latest
  size_t s = pos_x.at(chain_y[t]);

  size_t px = ox.preperiod.size(), clen = ox.cycle.size();
  std::vector<OrbitStep> path;
  auto forward_along = [&](size_t from, size_t count) {
    for (size_t r = 0; r < count; ++r)
      path.push_back({true, subinterval_digit(chain_x[from + r], base)});
  };
  if (s < px) {
    forward_along(0, s);
  } else {
    size_t off = s - px;
    if (off <= clen - off) {
      forward_along(0, px + off);
    } else {
      forward_along(0, px);
      Rational cur = ox.cycle.front();
      for (size_t step = 1; step <= clen - off; ++step) {
        const Rational& prev = ox.cycle[clen - step];
        path.push_back({false, backward_digit(cur, prev, base)});
        cur = prev;
      }
    }
  }
  for (size_t j = t; j > 0; --j)
    path.push_back({false, backward_digit(chain_y[j], chain_y[j - 1], base)});
  if (static_cast<int>(path.size()) > max_steps)
    throw Error("orbit path from " + rat_str(x) + " to " + rat_str(y) + " needs " +
                std::to_string(path.size()) + " steps, limit " +
                std::to_string(max_steps));
  return path;
}

Rational transport_along(const std::vector<OrbitStep>& path, const Rational& x,
                         int n, int k) {
  int m = source_base(n, k);
  if (!in_unit_interval(x)) throw Error("point " + rat_str(x) + " not in [0,1)");
  Rational zm = x;  // walks the base-m graph
  Rational zn = x;  // mirrored through gamma in the base-n graph
  for (const OrbitStep& st : path) {
    if (st.forward) {
      int digit = subinterval_digit(zm, m);
      if (digit != st.digit)
        throw Error("internal: forward step digit mismatch at " + rat_str(zm));
      Word g = gamma(digit, n, k);
      NadicInterval iv = to_interval(g, n);
      if (!iv.contains(zn))
        throw Error("internal: transported point escaped its subinterval");
      zn = (zn - iv.left()) * ipow(n, g.size());
      zn.canonicalize();
      zm = forward(zm, m);
    } else {
      check_digit(st.digit, m);
      Word g = gamma(st.digit, n, k);
      NadicInterval iv = to_interval(g, n);
      zn = zn / ipow(n, g.size()) + iv.left();
      zn.canonicalize();
      zm = (zm + (st.digit - 1)) / m;
      zm.canonicalize();
    }
  }
  return zn;
}

std::vector<OrbitStep> u_path(const Rational& y, const Rational& x, int n, int k,
                              int max_steps, PathOrder order) {
  int m = source_base(n, k);
  if (!in_unit_interval(x)) throw Error("point " + rat_str(x) + " not in [0,1)");
  if (!in_unit_interval(y)) throw Error("point " + rat_str(y) + " not in [0,1)");

  OrbitCycle ox = cycle_of(x, m);
  size_t pre = ox.preperiod.size(), clen = ox.cycle.size();
  std::vector<Rational> chain = ox.preperiod;
  chain.insert(chain.end(), ox.cycle.begin(), ox.cycle.end());
  std::map<Rational, size_t> pos;
  for (size_t i = 0; i < chain.size(); ++i) pos.emplace(chain[i], i);

  // Climb from y until the chain of x is hit, remembering the branch digits.
  std::vector<int> branch;
  Rational w = y;
  while (!pos.count(w)) {
    branch.push_back(subinterval_digit(w, m));
    w = forward(w, m);
    if (static_cast<int>(branch.size()) > max_steps)
      throw Error("point " + rat_str(y) + " does not reach the orbit of " +
                  rat_str(x) + " within " + std::to_string(max_steps) + " steps");
  }
  size_t attach = pos.at(w);

  // Reaching y downward from a cycle vertex means winding to `target`, then
  // `tail` more steps (down the preperiod stub first when y hangs off it).
  size_t target = attach >= pre ? attach - pre : 0;
  size_t tail = attach >= pre ? branch.size() : (pre - attach) + branch.size();

  // Forward steps survive transport only while the carried base-n point
  // starts with the gamma block of the digit being consumed.
  std::vector<Rational> carried{x};
  for (size_t t = 0; t < chain.size(); ++t) {
    Word g = gamma(subinterval_digit(chain[t], m), n, k);
    NadicInterval iv = to_interval(g, n);
    if (!iv.contains(carried.back())) break;
    Rational zn = (carried.back() - iv.left()) * ipow(n, g.size());
    zn.canonicalize();
    carried.push_back(zn);
  }
  size_t alive = carried.size() - 1;

  auto vertex_of = [&](size_t t) {  // index into chain after t forward steps
    return t < chain.size() ? t : pre + (t - pre) % clen;
  };
  const size_t inf = static_cast<size_t>(-1);
  auto down_cost = [&](size_t v) {
    if (v >= pre) return (v - pre + clen - target) % clen + tail;
    // Preperiod vertices only see the part of the orbit hanging below them.
    if (attach < pre && v >= attach) return (v - attach) + branch.size();
    return inf;
  };

  size_t best_cost = inf, best_t = inf;
  for (size_t t = 0; t <= alive; ++t) {
    size_t d = down_cost(vertex_of(t));
    if (d == inf) continue;
    size_t cost = t + d;
    bool better = cost < best_cost ||
                  (cost == best_cost && (order == PathOrder::forward_first
                                             ? t > best_t || best_t == inf
                                             : t < best_t));
    if (better) {
      best_cost = cost;
      best_t = t;
    }
  }
  if (best_cost == inf || static_cast<int>(best_cost) > max_steps)
    throw Error("no transportable path from " + rat_str(x) + " to " + rat_str(y) +
                " within " + std::to_string(max_steps) + " steps");

  std::vector<OrbitStep> path;
  for (size_t t = 0; t < best_t; ++t)
    path.push_back({true, subinterval_digit(chain[vertex_of(t)], m)});
  size_t v = vertex_of(best_t);
  if (v >= pre) {
    for (size_t i = v - pre; i != target; i = (i + clen - 1) % clen)
      path.push_back(
          {false, subinterval_digit(chain[pre + (i + clen - 1) % clen], m)});
    v = attach >= pre ? attach : pre;
  }
  for (; v > attach; --v) path.push_back({false, subinterval_digit(chain[v - 1], m)});
  for (size_t i = branch.size(); i > 0; --i) path.push_back({false, branch[i - 1]});
  return path;
}

Rational u_image(const Rational& y, const Rational& x, int n, int k, int max_steps) {
  return transport_along(u_path(y, x, n, k, max_steps), x, n, k);
}

std::vector<Rational> orbit_prime(const Rational& x, int n, int k, int depth,
                                  int max_steps) {
  int m = source_base(n, k);
  std::vector<Rational> out;
  for (const Rational& y : enumerate_orbit(x, m, depth))
    out.push_back(u_image(y, x, n, k, max_steps));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool check_intertwine(const Table& g, const Rational& x, int n, int k, int depth,
                      int max_steps) {
  int m = source_base(n, k);
  if (g.base() != m) throw Error("table alphabet does not match the embedding source");
  PLMap gm = table_to_plmap(g);
  PLMap gn = table_to_plmap(embed_table(g, n, k));
  for (const Rational& y : enumerate_orbit(x, m, depth)) {
    Rational lhs = u_image(evaluate(gm, y), x, n, k, max_steps);
    Rational rhs = evaluate(gn, u_image(y, x, n, k, max_steps));
    if (lhs != rhs) return false;
  }
  return true;
}

MatrixSection matrix_section(const CuntzSum& s, std::vector<Rational> basis,
                             bool parallel) {
  std::map<Rational, size_t> index;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (!in_unit_interval(basis[i]))
      throw Error("basis point " + rat_str(basis[i]) + " not in [0,1)");
    if (!index.emplace(basis[i], i).second)
      throw Error("duplicate basis point " + rat_str(basis[i]));
  }
  std::vector<std::vector<MatrixEntry>> cols(basis.size());
  std::vector<std::vector<OverflowEntry>> over(basis.size());
  long count = static_cast<long>(basis.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long j = 0; j < count; ++j) {
    FormalVector v = apply_sum(s, FormalVector::unit(s.base(), basis[j]));
    for (const auto& [point, coeff] : v.entries()) {
      auto it = index.find(point);
      if (it != index.end())
        cols[j].push_back({it->second, static_cast<size_t>(j), coeff});
      else
        over[j].push_back({basis[j], point, coeff});
    }
  }
  MatrixSection out;
  out.basis = std::move(basis);
  for (long j = 0; j < count; ++j) {
    out.entries.insert(out.entries.end(), cols[j].begin(), cols[j].end());
    out.overflow.insert(out.overflow.end(), over[j].begin(), over[j].end());
  }
  return out;
}

}  // namespace vn
