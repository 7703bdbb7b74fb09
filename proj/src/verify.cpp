#include "vn/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <memory>
#include <random>

#include "vn/cuntz.hpp"
#include "vn/embeddings.hpp"
#include "vn/orbits.hpp"
#include "vn/plmaps.hpp"
#include "vn/representation.hpp"
#include "vn/tables.hpp"

namespace vn {

static CheckResult pass() { return {true, ""}; }
static CheckResult fail(std::string detail) { return {false, std::move(detail)}; }

static std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  return seed + 0x9E3779B97F4A7C15ULL * (index + 1);
}

static CheckResult run_guarded(const BatchCase& c) {
  try {
    return c.run();
  } catch (const std::exception& e) {
    return fail(std::string("exception: ") + e.what());
  }
}

SuiteReport run_cases(const std::string& name, const std::vector<BatchCase>& cases,
                      bool parallel) {
  SuiteReport rep;
  rep.name = name;
  rep.cases = cases.size();
  std::vector<CheckResult> results(cases.size());
  auto t0 = std::chrono::steady_clock::now();
  if (parallel) {
    long count = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) results[i] = run_guarded(cases[i]);
  } else {
    for (size_t i = 0; i < cases.size(); ++i) results[i] = run_guarded(cases[i]);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  size_t best = cases.size();
  for (size_t i = 0; i < results.size(); ++i) {
    if (results[i].ok) continue;
    ++rep.failures;
    if (best == cases.size() ||
        results[i].detail.size() < results[best].detail.size())
      best = i;
  }
  if (best < cases.size())
    rep.first_failure = cases[best].label + ": " + results[best].detail;
  return rep;
}

std::string report_line(const SuiteReport& r) {
  char buf[64];
  snprintf(buf, sizeof buf, "%.2f", r.seconds);
  return (r.ok() ? "ok   " : "FAIL ") + r.name + ": " + std::to_string(r.cases) +
         " cases, " + std::to_string(r.failures) + " failures, " + buf + " s";
}

std::vector<BatchCase> group_suite(const SuiteParams& p) {
  std::vector<BatchCase> cs;
  cs.reserve(p.samples);
  for (int s = 0; s < p.samples; ++s) {
    std::uint64_t cseed = case_seed(p.seed, s);
    int n = p.n, depth = p.depth;
    cs.push_back({"triple#" + std::to_string(s) + "(n=" + std::to_string(n) + ")",
                  [n, depth, cseed]() -> CheckResult {
      Table g = random_table(n, depth, cseed);
      Table h = random_table(n, depth, cseed + 1);
      Table u = random_table(n, depth, cseed + 2);
      Table id = Table::identity(n);
      auto ctx = [&] {
        return " g=[" + g.str() + "] h=[" + h.str() + "] u=[" + u.str() + "]";
      };
      if (!equal(compose(compose(g, h), u), compose(g, compose(h, u))))
        return fail("associativity broken" + ctx());
      if (!equal(compose(g, id), g) || !equal(compose(id, g), g))
        return fail("identity element broken" + ctx());
      Table gi = invert(g);
      if (!equal(compose(g, gi), id) || !equal(compose(gi, g), id))
        return fail("inverse broken" + ctx());
      if (!(reduce(reduce(g)) == reduce(g)))
        return fail("reduce not idempotent" + ctx());
      if (!equal(invert(invert(g)), g))
        return fail("double inverse broken" + ctx());
      return pass();
    }});
  }
  return cs;
}

std::vector<BatchCase> psi_suite(const SuiteParams& p) {
  std::vector<BatchCase> cs;
  cs.reserve(p.samples);
  for (int s = 0; s < p.samples; ++s) {
    std::uint64_t cseed = case_seed(p.seed, s);
    int n = p.n, depth = p.depth;
    cs.push_back({"pair#" + std::to_string(s) + "(n=" + std::to_string(n) + ")",
                  [n, depth, cseed]() -> CheckResult {
      Table g = random_table(n, depth, cseed);
      Table h = random_table(n, depth, cseed + 1);
      auto ctx = [&] { return " g=[" + g.str() + "] h=[" + h.str() + "]"; };
      CuntzSum pg = psi(g), ph = psi(h);
      if (!is_identity(multiply_sums(pg, adjoint(pg))) ||
          !is_identity(multiply_sums(adjoint(pg), pg)))
        return fail("unitarity broken" + ctx());
      if (!(psi(compose(g, h)) == multiply_sums(pg, ph)))
        return fail("multiplicativity broken" + ctx());
      if (!(adjoint(pg) == psi(invert(g))))
        return fail("adjoint vs inverse broken" + ctx());
      if ((pg == ph) != equal(g, h))
        return fail("faithfulness broken" + ctx());
      if (!(normalize(pg) == pg))
        return fail("normal form unstable" + ctx());
      return pass();
    }});
  }
  return cs;
}

std::vector<BatchCase> iota_suite(const SuiteParams& p) {
  std::vector<BatchCase> cs;
  int n = p.n, k = p.k;
  int m = source_base(n, k);
  auto image = [n, k](int y) {
    return CuntzSum::monomial(n, 1, gamma(y, n, k), Word());
  };
  for (int y = 1; y <= m; ++y) {
    for (int z = 1; z <= m; ++z) {
      cs.push_back({"rel(" + std::to_string(y) + "," + std::to_string(z) + ",n=" +
                        std::to_string(n) + ",k=" + std::to_string(k) + ")",
                    [image, y, z, n]() -> CheckResult {
        CuntzSum prod = multiply_sums(adjoint(image(y)), image(z));
        if (y == z ? is_identity(prod) : prod.is_zero()) return pass();
        return fail("isometry relation broken: got " + prod.str());
      }});
    }
  }
  cs.push_back({"sum(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")",
                [image, m, n]() -> CheckResult {
    CuntzSum acc(n);
    for (int y = 1; y <= m; ++y)
      acc = add(acc, multiply_sums(image(y), adjoint(image(y))));
    if (is_identity(acc)) return pass();
    return fail("range projections do not sum to 1: got " + acc.str());
  }});
  cs.push_back({"code(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")",
                [m, n, k]() -> CheckResult {
    std::vector<Word> ws;
    for (int y = 1; y <= m; ++y) ws.push_back(gamma(y, n, k));
    if (is_maximal_prefix_code(ws, n)) return pass();
    return fail("letter images do not form a maximal code");
  }});
  return cs;
}

std::vector<BatchCase> action_suite(const SuiteParams& p) {
  std::vector<BatchCase> cs;
  cs.reserve(p.samples);
  Rational x = p.points.empty() ? Rational(0) : p.points.front();
  auto pool = std::make_shared<const std::vector<Rational>>(
      enumerate_orbit(x, p.n, p.orbit_depth));
  for (int s = 0; s < p.samples; ++s) {
    std::uint64_t cseed = case_seed(p.seed, s);
    int n = p.n, depth = p.depth;
    cs.push_back({"act#" + std::to_string(s) + "(n=" + std::to_string(n) +
                      ",x=" + rat_str(x) + ")",
                  [n, depth, cseed, pool, x]() -> CheckResult {
      Table g = random_table(n, depth, cseed);
      std::mt19937_64 rng(cseed + 0x51ED270B);
      const Rational& y = (*pool)[rng() % pool->size()];
      auto ctx = [&] { return " g=[" + g.str() + "] y=" + rat_str(y); };
      Rational gy = act(g, y);
      FormalVector moved = apply_sum(psi(g), FormalVector::unit(n, y));
      if (!(moved == FormalVector::unit(n, gy)))
        return fail("operator sum disagrees with the point map:" + ctx() +
                    " got " + moved.str());
      if (!equivalent(x, gy, n))
        return fail("image left the orbit:" + ctx() + " g(y)=" + rat_str(gy));
      FormalVector back = apply_sum(psi(invert(g)), FormalVector::unit(n, gy));
      if (!(back == FormalVector::unit(n, y)))
        return fail("inverse action broken:" + ctx());
      return pass();
    }});
  }
  return cs;
}

// Order-preserving element: sorted-to-sorted pairing of two random codes.
static Table monotone_table(int n, int depth, std::uint64_t seed, size_t shift) {
  Table raw = random_table(n, depth, seed);
  PrefixCode dom = raw.domain_code(), ran = raw.range_code();
  size_t m = dom.size();
  std::vector<std::pair<Word, Word>> rows;
  for (size_t i = 0; i < m; ++i) rows.push_back({ran[(i + shift) % m], dom[i]});
  return Table::from_rows_unchecked(std::move(rows), n);
}

std::vector<BatchCase> embedding_suite(const SuiteParams& p) {
  std::vector<BatchCase> cs;
  int n = p.n, k = p.k;
  int m = source_base(n, k);
  for (int s = 0; s < p.samples; ++s) {
    std::uint64_t cseed = case_seed(p.seed, s);
    int depth = p.depth;
    cs.push_back({"pair#" + std::to_string(s) + "(n=" + std::to_string(n) +
                      ",k=" + std::to_string(k) + ")",
                  [n, k, m, depth, cseed]() -> CheckResult {
      Table g = random_table(m, depth, cseed);
      Table h = random_table(m, depth, cseed + 1);
      auto ctx = [&] { return " g=[" + g.str() + "] h=[" + h.str() + "]"; };
      Table eg = embed_table(g, n, k), eh = embed_table(h, n, k);
      if (!equal(embed_table(compose(g, h), n, k), compose(eg, eh)))
        return fail("embedding not multiplicative" + ctx());
      if (equal(eg, eh) != equal(g, h))
        return fail("embedding not injective" + ctx());
      if (!(psi(eg) == iota_sum(psi(g), n, k)))
        return fail("embedding disagrees with the monomial map" + ctx());
      return pass();
    }});
  }
  int classes = std::max(1, p.samples / 10);
  for (int s = 0; s < classes; ++s) {
    std::uint64_t cseed = case_seed(p.seed + 0xC1A55, s);
    int depth = p.depth;
    cs.push_back({"class#" + std::to_string(s) + "(n=" + std::to_string(n) +
                      ",k=" + std::to_string(k) + ")",
                  [n, k, m, depth, cseed]() -> CheckResult {
      Table f_elt = monotone_table(m, depth, cseed, 0);
      if (classify(f_elt) != GroupClass::F)
        return fail("monotone pairing not in F: [" + f_elt.str() + "]");
      if (classify(embed_table(f_elt, n, k)) != GroupClass::F)
        return fail("embedding broke the F class: [" + f_elt.str() + "]");
      std::mt19937_64 rng(cseed + 1);
      Table t_elt = monotone_table(m, depth, cseed + 2,
                                   1 + rng() % (source_base(n, k) - 1));
      GroupClass ct = classify(t_elt);
      if (ct == GroupClass::V)
        return fail("rotated pairing left T: [" + t_elt.str() + "]");
      if (classify(embed_table(t_elt, n, k)) != ct)
        return fail("embedding broke the T class: [" + t_elt.str() + "]");
      return pass();
    }});
  }
  // Word-morphism properties, exhaustive over short words; one case per
  // length of the left word to keep cases balanced.
  for (int len = 0; len <= 4; ++len) {
    cs.push_back({"words(len=" + std::to_string(len) + ",n=" + std::to_string(n) +
                      ",k=" + std::to_string(k) + ")",
                  [n, k, m, len]() -> CheckResult {
      std::vector<Word> shorts, all;
      all.push_back(Word());
      for (int l = 1; l <= 4; ++l) {
        std::vector<Word> next;
        for (const Word& w : all)
          if (static_cast<int>(w.size()) == l - 1)
            for (int j = 1; j <= m; ++j) next.push_back(w.appended(j));
        all.insert(all.end(), next.begin(), next.end());
      }
      for (const Word& w : all)
        if (static_cast<int>(w.size()) == len) shorts.push_back(w);
      for (const Word& u : shorts) {
        Word fu = f_morphism(u, n, k);
        for (const Word& v : all) {
          Word fv = f_morphism(v, n, k);
          if ((u == v) != (fu == fv))
            return fail("not injective at " + u.str(m) + "," + v.str(m));
          if (is_prefix(u, v) != is_prefix(fu, fv))
            return fail("prefix structure broken at " + u.str(m) + "," + v.str(m));
          if (lex_compare(u, v) != lex_compare(fu, fv))
            return fail("order broken at " + u.str(m) + "," + v.str(m));
        }
      }
      return pass();
    }});
  }
  return cs;
}

std::vector<BatchCase> intertwine_suite(const SuiteParams& p) {
  std::vector<BatchCase> cs;
  int n = p.n, k = p.k;
  int m = source_base(n, k);
  Rational x = p.points.empty() ? Rational(0) : p.points.front();
  auto pool = std::make_shared<const std::vector<Rational>>(
      enumerate_orbit(x, m, p.orbit_depth));
  for (int s = 0; s < p.samples; ++s) {
    std::uint64_t cseed = case_seed(p.seed, s);
    int depth = p.depth;
    cs.push_back({"basis#" + std::to_string(s) + "(n=" + std::to_string(n) +
                      ",k=" + std::to_string(k) + ",x=" + rat_str(x) + ")",
                  [n, k, m, depth, cseed, pool, x]() -> CheckResult {
      Table g = random_table(m, depth, cseed);
      std::mt19937_64 rng(cseed + 0x7E57);
      const Rational& y = (*pool)[rng() % pool->size()];
      auto ctx = [&] { return " g=[" + g.str() + "] y=" + rat_str(y); };
      FormalVector gy = apply_sum(psi(g), FormalVector::unit(m, y));
      auto gy_pt = gy.as_unit();
      if (!gy_pt) return fail("action not permutative:" + ctx());
      Rational lhs = u_image(*gy_pt, x, n, k, 512);
      FormalVector egy = apply_sum(psi(embed_table(g, n, k)),
                                   FormalVector::unit(n, u_image(y, x, n, k, 512)));
      auto rhs = egy.as_unit();
      if (!rhs) return fail("embedded action not permutative:" + ctx());
      if (!(lhs == *rhs))
        return fail("transport does not intertwine:" + ctx() + " lhs=" +
                    rat_str(lhs) + " rhs=" + rat_str(*rhs));
      return pass();
    }});
  }
  int paths = std::max(1, p.samples / 2);
  for (int s = 0; s < paths; ++s) {
    std::uint64_t cseed = case_seed(p.seed + 0xDE7013, s);
    cs.push_back({"path#" + std::to_string(s) + "(n=" + std::to_string(n) +
                      ",k=" + std::to_string(k) + ",x=" + rat_str(x) + ")",
                  [n, k, m, cseed, pool, x]() -> CheckResult {
      std::mt19937_64 rng(cseed);
      const Rational& y = (*pool)[rng() % pool->size()];
      Rational direct = u_image(y, x, n, k, 512);
      Rational swapped = transport_along(
          u_path(y, x, n, k, 512, PathOrder::backward_first), x, n, k);
      if (!(swapped == direct))
        return fail("tie-break dependence at y=" + rat_str(y) + ": " +
                    rat_str(direct) + " vs " + rat_str(swapped));
      // Same endpoints, different walk: a random closed detour at x first.
      std::vector<OrbitStep> walk;
      int rounds = 1 + static_cast<int>(rng() % 4);
      std::vector<int> digits;
      for (int t = 0; t < rounds; ++t)
        digits.push_back(1 + static_cast<int>(rng() % m));
      for (int d : digits) walk.push_back({false, d});
      for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        walk.push_back({true, *it});
      std::vector<OrbitStep> tail = u_path(y, x, n, k, 512);
      walk.insert(walk.end(), tail.begin(), tail.end());
      Rational alt = transport_along(walk, x, n, k);
      if (alt == direct) return pass();
      return fail("path dependence at y=" + rat_str(y) + ": " + rat_str(direct) +
                  " vs " + rat_str(alt));
    }});
  }
  for (int s = 0; s < 3; ++s) {
    std::uint64_t cseed = case_seed(p.seed + 0x0B17, s);
    int depth = p.depth;
    cs.push_back({"orbit#" + std::to_string(s) + "(n=" + std::to_string(n) +
                      ",k=" + std::to_string(k) + ",x=" + rat_str(x) + ")",
                  [n, k, m, depth, cseed, x]() -> CheckResult {
      Table g = random_table(m, depth, cseed);
      if (check_intertwine(g, x, n, k, 2, 512)) return pass();
      return fail("whole-orbit intertwining failed for g=[" + g.str() + "]");
    }});
  }
  return cs;
}

// The three explicit witnesses used to pull every generator out of the
// represented group algebra.
static Table swap_subtree_table(int n, int i) {
  std::vector<std::pair<Word, Word>> rows;
  for (int j = 1; j <= n; ++j) {
    rows.push_back({Word({i, j}), Word({n, j})});
    rows.push_back({Word({n, j}), Word({i, j})});
  }
  for (int a = 1; a <= n; ++a)
    if (a != i && a != n) rows.push_back({Word::single(a), Word::single(a)});
  return Table::validated(std::move(rows), n);
}

static Table deepen_table(int n, int i) {
  PrefixCode range = expand(PrefixCode::level_one(n), Word::single(i));
  PrefixCode domain = expand(PrefixCode::level_one(n), Word::single(i == 1 ? n : 1));
  Word special_a({i, i}), special_b({i});
  std::vector<std::pair<Word, Word>> rows{{special_a, special_b}};
  std::vector<Word> rest_a, rest_b;
  for (const Word& w : range.words())
    if (!(w == special_a)) rest_a.push_back(w);
  for (const Word& w : domain.words())
    if (!(w == special_b)) rest_b.push_back(w);
  for (size_t t = 0; t < rest_a.size(); ++t) rows.push_back({rest_a[t], rest_b[t]});
  return Table::validated(std::move(rows), n);
}

static Table letter_swap_table(int n, int i) {
  std::vector<std::pair<Word, Word>> rows;
  for (int j = 1; j <= n; ++j) {
    int img = j == i ? n : (j == n ? i : j);
    rows.push_back({Word::single(img), Word::single(j)});
  }
  return Table::validated(std::move(rows), n);
}

std::vector<BatchCase> crho_suite(const SuiteParams& p) {
  std::vector<BatchCase> cs;
  int n = p.n;
  auto mono = [n](Word a, Word b) {
    return CuntzSum::monomial(n, 1, std::move(a), std::move(b));
  };
  for (int i = 1; i <= n - 1; ++i) {
    cs.push_back({"swap(i=" + std::to_string(i) + ",n=" + std::to_string(n) + ")",
                  [n, i, mono]() -> CheckResult {
      Table t = swap_subtree_table(n, i);
      CuntzSum got = multiply_sums(psi(t), mono(Word::single(n), Word()));
      CuntzSum want = mono(Word::single(i), Word());
      if (got == want) return pass();
      return fail("expected " + want.str() + ", got " + got.str());
    }});
  }
  for (int i = 1; i <= n; ++i) {
    cs.push_back({"deepen(i=" + std::to_string(i) + ",n=" + std::to_string(n) + ")",
                  [n, i, mono]() -> CheckResult {
      Table t = deepen_table(n, i);
      CuntzSum got = multiply_sums(psi(t), mono(Word::single(i), Word::single(i)));
      CuntzSum want = mono(Word({i, i}), Word::single(i));
      if (got == want) return pass();
      return fail("expected " + want.str() + ", got " + got.str());
    }});
    cs.push_back({"relabel(i=" + std::to_string(i) + ",n=" + std::to_string(n) + ")",
                  [n, i, mono]() -> CheckResult {
      Table t = letter_swap_table(n, i);
      CuntzSum got = multiply_sums(psi(t), mono(Word({i, i}), Word::single(i)));
      CuntzSum want = mono(Word({n, i}), Word::single(i));
      if (got == want) return pass();
      return fail("expected " + want.str() + ", got " + got.str());
    }});
  }
  return cs;
}

std::vector<BatchCase> orbit_equiv_suite(const SuiteParams& p) {
  std::vector<BatchCase> cs;
  cs.reserve(p.samples + 2);
  for (int s = 0; s < p.samples; ++s) {
    std::uint64_t cseed = case_seed(p.seed, s);
    int n = p.n;
    cs.push_back({"laws#" + std::to_string(s) + "(n=" + std::to_string(n) + ")",
                  [n, cseed]() -> CheckResult {
      std::mt19937_64 rng(cseed);
      Int q = 2 + static_cast<long>(rng() % 999);
      Rational x(Int(static_cast<long>(rng() % q.get_ui())), q);
      x.canonicalize();
      // Walk the orbit to manufacture genuinely equivalent points.
      Rational y = x;
      for (int t = rng() % 4; t > 0; --t) y = forward(y, n);
      y = preimages(y, n)[rng() % n];
      Rational z = preimages(forward(y, n), n)[rng() % n];
      auto ctx = [&] {
        return " x=" + rat_str(x) + " y=" + rat_str(y) + " z=" + rat_str(z);
      };
      if (!equivalent(x, x, n)) return fail("not reflexive:" + ctx());
      if (!equivalent(x, y, n) || !equivalent(y, x, n))
        return fail("orbit walk not recognized:" + ctx());
      if (!equivalent(y, z, n) || !equivalent(x, z, n))
        return fail("not transitive:" + ctx());
      Int q2 = 2 + static_cast<long>(rng() % 999);
      Rational w(Int(static_cast<long>(rng() % q2.get_ui())), q2);
      w.canonicalize();
      if (equivalent(x, w, n) != equivalent(w, x, n))
        return fail("not symmetric:" + ctx() + " w=" + rat_str(w));
      return pass();
    }});
  }
  cs.push_back({"witness(1/3~2/3,n=2)", []() -> CheckResult {
    if (equivalent(Rational(1, 3), Rational(2, 3), 2)) return pass();
    return fail("1/3 and 2/3 must share their cycle under doubling");
  }});
  cs.push_back({"witness(1/3!~1/5,n=2)", []() -> CheckResult {
    if (!equivalent(Rational(1, 3), Rational(1, 5), 2)) return pass();
    return fail("1/3 and 1/5 must lie in different orbits under doubling");
  }});
  return cs;
}

std::vector<std::string> suite_names() {
  return {"group", "psi", "iota", "action", "embedding", "intertwine", "crho",
          "orbit"};
}

std::vector<BatchCase> build_suite(const std::string& name, const SuiteParams& p) {
  if (name == "group") return group_suite(p);
  if (name == "psi") return psi_suite(p);
  if (name == "iota") return iota_suite(p);
  if (name == "action") return action_suite(p);
  if (name == "embedding") return embedding_suite(p);
  if (name == "intertwine") return intertwine_suite(p);
  if (name == "crho") return crho_suite(p);
  if (name == "orbit") return orbit_equiv_suite(p);
  throw Error("unknown suite '" + name + "'");
}

}  // namespace vn
