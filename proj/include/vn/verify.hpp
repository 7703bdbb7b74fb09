#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vn/rational.hpp"

namespace vn {

struct CheckResult {
  bool ok = true;
  std::string detail;  // on failure: the inputs plus the law they break
};

// One independent property check; closures own their inputs (or the seeds
// to regenerate them), so cases can run on any thread in any order.
struct BatchCase {
  std::string label;
  std::function<CheckResult()> run;
};

struct SuiteReport {
  std::string name;
  size_t cases = 0;
  size_t failures = 0;
  // Failure with the shortest description, as a stand-in for "smallest".
  std::string first_failure;
  double seconds = 0.0;
  bool ok() const { return failures == 0; }
};

// Runs all cases serially or fanned across OpenMP threads; the report is
// assembled from the ordered result list, so both modes agree exactly.
SuiteReport run_cases(const std::string& name, const std::vector<BatchCase>& cases,
                      bool parallel);

struct SuiteParams {
  int n = 2;
  int k = 2;
  int samples = 100;
  int depth = 3;      // table depth for random elements
  int orbit_depth = 3;
  std::uint64_t seed = 1;
  std::vector<Rational> points;  // orbit anchors where the suite needs them
};

// group: associativity, identity, inverses, reduce idempotence.
std::vector<BatchCase> group_suite(const SuiteParams& p);
// psi: unitarity, multiplicativity, adjoint vs inverse, faithfulness.
std::vector<BatchCase> psi_suite(const SuiteParams& p);
// iota: the generator images satisfy the defining relations.
std::vector<BatchCase> iota_suite(const SuiteParams& p);
// action: operator sums move delta_y exactly as the point map does.
std::vector<BatchCase> action_suite(const SuiteParams& p);
// embedding: homomorphism, word-morphism properties, class preservation.
std::vector<BatchCase> embedding_suite(const SuiteParams& p);
// intertwine: the transported representation matches the embedded one.
std::vector<BatchCase> intertwine_suite(const SuiteParams& p);
// crho: the three explicit operator identities behind the generation proof.
std::vector<BatchCase> crho_suite(const SuiteParams& p);
// orbit equivalence: relation laws on random rationals plus fixed witnesses.
std::vector<BatchCase> orbit_equiv_suite(const SuiteParams& p);

std::vector<std::string> suite_names();
std::vector<BatchCase> build_suite(const std::string& name, const SuiteParams& p);

std::string report_line(const SuiteReport& r);

}  // namespace vn
