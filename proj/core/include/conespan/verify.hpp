#pragma once

// Run configuration validation and the invariant suite behind `verify`.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "conespan/generate.hpp"
#include "conespan/graph_build.hpp"

namespace conespan {

/// Invalid combination of command-line options.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { gen, build, stretch, path, verify, render };

struct RunConfig {
  Command command = Command::build;
  Family family = Family::yao;
  int k = 8;
  GenSpec gen;
  std::optional<std::string> input;
  std::optional<std::string> output;
  double tolerance = kRelTol;
};

/// Throws ConfigError when k does not meet the family's requirements:
/// k >= 1 always; trapezoidal Yao needs k > 24; computing a spanner bound for
/// overlapping Yao needs k > 24. Returns warnings for runs that are allowed
/// but carry no guarantee (e.g. overlapping Yao with k <= 24).
std::vector<std::string> validate_run_config(const RunConfig& config);

/// Stretch bound attached to a family and parameter, when one applies:
/// tau_bound(k) for OY/TY with k > 24, t_bound(k/2).t_k for YY with even
/// k >= 84, none otherwise.
std::optional<double> family_bound(Family family, int k);

struct CheckResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  double tolerance = 0.0;
  std::string detail;
  std::vector<std::string> witnesses;
};

struct VerifyConfig {
  std::vector<Point> points;
  int k = 30;
  std::uint64_t seed = 1;
  double tolerance = kRelTol;
  std::size_t samples = 100000;
  std::size_t max_descent_scenarios = 2000;
  /// When set, replaces the constructed graph of `override_family` with
  /// these edges (used to audit externally produced edge lists).
  std::optional<std::vector<DirectedEdge>> override_edges;
  Family override_family = Family::trapezoidal_yao;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

VerifyReport run_verify(const VerifyConfig& config);

std::string format_verify_report(const VerifyReport& report,
                                 const VerifyConfig& config,
                                 const std::string& input);

}  // namespace conespan
