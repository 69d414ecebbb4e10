#pragma once

// The golden-data battery behind `hyperdet verify-paper`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperdet/algebra.hpp"

namespace hyperdet {

struct CheckResult {
  std::string group;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct BatteryOptions {
  // Group or check name; empty runs everything.
  std::string only;
  std::uint64_t seed = 20100101;
  // Replaces the built-in coefficient table as the expected invariant.
  std::optional<IntPolynomial> reference;
};

// basis, codomains, kernel, coefficients, annihilation, orbits, invariance,
// cayley, dims.
std::vector<std::string> battery_groups();

// Throws std::invalid_argument when `only` names nothing.
std::vector<CheckResult> run_battery(const BatteryOptions& options);

std::string format_result(const CheckResult& r);

}  // namespace hyperdet
