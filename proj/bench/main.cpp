// Times every verification suite and the matrix-section kernel in serial
// and OpenMP mode; the parallel run must reproduce the serial results
// bit for bit, so this doubles as a determinism check.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vn/cuntz.hpp"
#include "vn/orbits.hpp"
#include "vn/representation.hpp"
#include "vn/tables.hpp"
#include "vn/verify.hpp"

using namespace vn;

static int failures = 0;

static void bench_suite(const std::string& name, const SuiteParams& p) {
  std::vector<BatchCase> cases = build_suite(name, p);
  SuiteReport serial = run_cases(name, cases, false);
  SuiteReport parallel = run_cases(name, cases, true);
  bool same = serial.failures == parallel.failures &&
              serial.first_failure == parallel.first_failure;
  if (!same || !serial.ok()) ++failures;
  std::printf("%-22s %6zu cases  serial %7.3f s  parallel %7.3f s  x%.2f  %s\n",
              (name + "(n=" + std::to_string(p.n) + ")").c_str(), cases.size(),
              serial.seconds, parallel.seconds,
              parallel.seconds > 0 ? serial.seconds / parallel.seconds : 0.0,
              same ? (serial.ok() ? "match" : "match(FAIL)") : "MISMATCH");
}

static void bench_matrix(int n, int depth) {
  Table g = random_table(n, 4, 20240817);
  CuntzSum s = psi(g);
  std::vector<Rational> basis = enumerate_orbit(Rational(1, 3), n, depth);
  auto t0 = std::chrono::steady_clock::now();
  MatrixSection serial = matrix_section(s, basis, false);
  auto t1 = std::chrono::steady_clock::now();
  MatrixSection parallel = matrix_section(s, basis, true);
  auto t2 = std::chrono::steady_clock::now();
  double ts = std::chrono::duration<double>(t1 - t0).count();
  double tp = std::chrono::duration<double>(t2 - t1).count();
  bool same = serial == parallel;
  if (!same) ++failures;
  std::printf("%-22s %6zu cols   serial %7.3f s  parallel %7.3f s  x%.2f  %s\n",
              ("matrix(n=" + std::to_string(n) + ")").c_str(), basis.size(), ts, tp,
              tp > 0 ? ts / tp : 0.0, same ? "match" : "MISMATCH");
}

int main(int argc, char** argv) {
  int scale = argc > 1 ? std::atoi(argv[1]) : 1;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  SuiteParams p;
  p.seed = 99;
  p.depth = 4;
  p.samples = 300 * scale;
  for (int n : {2, 3}) {
    p.n = n;
    bench_suite("group", p);
    bench_suite("psi", p);
  }
  p.n = 2;
  p.depth = 3;
  p.orbit_depth = 5;
  p.points = {Rational(1, 3)};
  bench_suite("action", p);
  p.k = 2;
  p.depth = 2;
  p.orbit_depth = 3;
  bench_suite("embedding", p);
  p.points = {Rational(0)};  // transport identities only hold at synced anchors
  bench_suite("intertwine", p);
  bench_matrix(2, 9 + scale);
  bench_matrix(3, 6 + scale);
  if (failures) {
    std::printf("FAIL: %d mismatches\n", failures);
    return 1;
  }
  std::printf("all serial/parallel results match\n");
  return 0;
}
