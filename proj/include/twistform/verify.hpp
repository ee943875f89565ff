#pragma once

// Verification suites behind `twistform verify`.

#include <cstdint>
#include <string>
#include <vector>

#include "twistform/serialization.hpp"

namespace twistform {

inline constexpr const char* kToolVersion = "1.0.0";

struct VerifyConfig {
  std::uint64_t seed = 42;
  double c_light = 1.0;
  int quad_order = kDefaultQuadratureOrder;
  double tol_algebra = 1e-12;
  double tol_quad = 1e-6;
  int dim_lo = 2;
  int dim_hi = 5;
};

struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// value <= tolerance.
Check at_most(std::string name, double value, double tolerance);
/// value > tolerance.
Check above(std::string name, double value, double tolerance);

struct Report {
  std::string suite;
  json config;
  std::vector<Check> checks;

  bool pass() const;
};

json to_json(const Report& r);

const std::vector<std::string>& suite_names();  // excluding "all"

/// Runs one suite or "all"; throws std::invalid_argument for unknown names.
Report run_suite(const std::string& name, const VerifyConfig& cfg);

json config_to_json(const VerifyConfig& cfg);

}  // namespace twistform
