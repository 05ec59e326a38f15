#pragma once

#include <string>
#include <vector>

#include "rsphoton/constants.hpp"
#include "rsphoton/grid.hpp"

#include "json.hpp"

namespace rsph {

struct RunConfig {
  std::string units = "natural";  // "natural" or "si"
  GridSpec grid{};                // 32^3, L = 2*pi by default
  unsigned seed = 42;
  bool corruptFixture = false;    // negative control: sabotage one maxwell fixture
  std::string outDir = ".";

  PhysicalConstants constants() const;
  static RunConfig fromJson(const nlohmann::ordered_json& j);  // throws std::invalid_argument
};

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const;
  nlohmann::ordered_json toJson() const;
};

// Named verification suites: algebra, maxwell, noether, quantum; "all" runs
// every suite in that order. Unknown name throws std::invalid_argument.
std::vector<SuiteResult> runSuites(const std::string& name, const RunConfig& cfg);

}  // namespace rsph
