#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tatek {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  bool pass() const;
};

/// arith, wreath, devoto, powerops, hinfty, moonshine; "all" runs each in turn.
const std::vector<std::string> &suite_names();

/// Throws std::invalid_argument for an unknown suite. The same seed always
/// produces the same checks and details.
std::vector<SuiteResult> run_suite(const std::string &name, std::uint64_t seed);

} // namespace tatek
