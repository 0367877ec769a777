#pragma once

#include <string>
#include <vector>

namespace definetti {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // deterministic summary, or the failure message
  double seconds = 0;  // diagnostic only; never part of stable output
};

// Full cross-check suite: every module invariant, run in a fixed order.
// Exceptions inside a check are caught and reported as failures.
std::vector<CheckResult> run_verification();

}  // namespace definetti
