#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bje::verify {

/// One numeric comparison inside a criterion.
struct Check {
  std::string label;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct CriterionResult {
  std::string name;
  std::string summary;
  std::vector<Check> checks;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  bool passed = false;

  /// Largest measured / tolerance ratio over the checks.
  double worst_ratio() const;
};

struct Options {
  std::uint64_t seed = 20240611;
  unsigned threads = 0;
  /// Multiplies every tolerance. Values below 1 tighten the suite; the test
  /// fixtures use a tiny scale to exercise the failure path.
  double tolerance_scale = 1.0;
  /// Whether the wall-clock budget counts toward the verdict.
  bool enforce_budget = true;
};

/// Criterion names in execution order.
const std::vector<std::string>& criterion_names();

/// Throws std::invalid_argument for an unknown name.
CriterionResult run_criterion(const std::string& name, const Options& options = {});

/// Runs `only` (all criteria when empty) in the canonical order.
std::vector<CriterionResult> run(const std::vector<std::string>& only, const Options& options = {});

}  // namespace bje::verify
