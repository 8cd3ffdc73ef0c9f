#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace stokes {

inline constexpr const char* kToolVersion = "1.0.0";

struct CheckRecord {
  std::string name;
  std::string inputs;
  std::vector<std::pair<std::string, double>> values;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double millis = 0.0;
};

struct Report {
  std::string version = kToolVersion;
  std::string suite;
  std::vector<CheckRecord> checks;

  /// True iff every check passed (and there is at least one).
  bool pass() const;
  /// Drops wall-clock times so repeated runs serialize identically.
  void clearTimings();
  void append(const Report& other);
};

/// Schema (value labels keep their order, hence ordered_json):
///   {version, suite, pass,
///    checks: [{name, inputs, values: {label: number}, residual, tolerance,
///              pass, millis}]}
nlohmann::ordered_json toJson(const Report& r);
Report reportFromJson(const nlohmann::ordered_json& j);

}  // namespace stokes
