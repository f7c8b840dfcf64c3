#pragma once

#include <string>
#include <vector>

namespace dampwave {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Self-contained identity and property suite (no configuration needed).
std::vector<CheckResult> run_verify_suite();

}  // namespace dampwave
