#pragma once

// Verification suites: each closed form checked against the oracle layer.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ahg {

struct CheckResult {
  std::string suite;
  std::string name;
  double error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

struct VerifyOptions {
  /// Dimension and degree bound for the orthogonality suite.
  std::size_t n = 2;
  int max_order = 3;
  /// Quadrature nodes per axis; 0 keeps each suite's default.
  int nodes = 0;
  /// Replaces every tolerance when set.
  std::optional<double> tolerance;
  /// Per-check overrides keyed "suite.check".
  std::map<std::string, double> tolerances;
  std::uint64_t seed = 20240611;
};

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Throws UsageError for an unknown suite. "all" runs every suite in order.
std::vector<CheckResult> run_suite(std::string_view name, const VerifyOptions& options = {});

/// "PASS suite.check error=... tol=... note"
std::string format_check(const CheckResult& c);

}  // namespace ahg
