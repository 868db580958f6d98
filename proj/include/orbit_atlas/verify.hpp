#pragma once

#include <string>
#include <vector>

#include "orbit_atlas/monoid.hpp"

namespace orbit_atlas {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  /// Reported findings that are not pass/fail claims.
  bool informational = false;
};

/// Compares a built (3, 2) graph with the transcribed figure. Returns an
/// empty string on success, otherwise the first mismatch.
std::string compare_with_figure(const OrbitGraph& g);

/// Exhaustive cross-module checks. Enumeration-based checks run for
/// n <= min(max_n, 5) (bijections, actions) or min(max_n, 6) (counts);
/// series identities use truncation `order`.
std::vector<CheckResult> run_verification(int max_n, int order);

/// One "PASS name: detail" line per check.
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace orbit_atlas
