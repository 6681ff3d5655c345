#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bp {

struct VerifyConfig {
  std::uint64_t seed = 1;
  double tol = 1e-9;
  double fd_step = 1e-5;
  double jacobi_tol = 1e-5;
};

/// One measured quantity against its bound; value is the worst case over the samples.
struct Check {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  int samples = 0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  // reported quantities without a pass/fail bound (e.g. the calibration constant)
  std::vector<std::pair<std::string, double>> measured;

  bool pass() const;
};

/// factorization, embedding, bivector, local-vs-equivariant, jacobi,
/// lambda-identity, degeneracy, momentum.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Each suite reseeds from cfg.seed.
std::vector<SuiteReport> run_suites(std::string_view name, const VerifyConfig& cfg);

/// Deterministic JSON (no timing, fixed key order).
std::string report_json(const std::vector<SuiteReport>& reports, const VerifyConfig& cfg);

}  // namespace bp
