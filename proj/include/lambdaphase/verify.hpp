#pragma once

// Invariant suites behind `lambdaphase verify`.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace lambdaphase {

struct CheckResult {
  std::string suite;
  std::string name;
  double value = 0.0;
  /// Pass when value < threshold, value == 0 for a zero threshold, or
  /// value >= threshold when at_least is set.
  double threshold = 0.0;
  bool at_least = false;
  bool passed = false;
};

inline constexpr std::string_view kSuiteNames[] = {"algebra", "dynamics", "relphase", "oracle", "all"};

/// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_suite(std::string_view suite);

/// One line per check; returns true when everything passed.
bool print_report(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace lambdaphase
