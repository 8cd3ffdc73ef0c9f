#pragma once

// Verification suites and demos driven by the command-line tool.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "stokes/quadrature.hpp"
#include "stokes/report.hpp"

namespace stokes {

struct SuiteOptions {
  int order = kDefaultOrder;
  int maxN = 12;            // combinatorics: i <= maxN, j <= maxN - 1
  std::uint64_t seed = 0;   // sample points and boxes
  std::string scenarioFile; // classical: empty means built-in scenarios
};

const std::vector<std::string>& suiteNames();
const std::vector<std::string>& demoNames();

/// Throws IndexError for an unknown name.
Report runSuite(const std::string& name, const SuiteOptions& options);
Report runDemo(const std::string& name, const SuiteOptions& options);

/// A classical-theorem scenario. `exprs` holds, by kind:
///   ftc, ftc_paths: [f]       green: [P, Q]
///   divergence: [F_0..F_d-1]  ibp: [f, g]
/// `expected`, when present, pins the closed-form value of the boundary side
/// (ftc), the area integral (green), the volume integral (divergence) or the
/// left-hand side (ibp).
struct Scenario {
  std::string name;
  std::string kind;
  std::vector<std::string> exprs;
  std::vector<double> lo;
  std::vector<double> hi;
  double tolerance = 0.0;
  bool hasExpected = false;
  double expected = 0.0;
};

std::vector<Scenario> defaultScenarios();
std::vector<Scenario> scenariosFromJson(const nlohmann::json& j);
nlohmann::ordered_json scenariosToJson(const std::vector<Scenario>& s);
std::vector<Scenario> loadScenarios(const std::string& path);

Report runScenarios(const std::vector<Scenario>& scenarios, int order);

}  // namespace stokes
