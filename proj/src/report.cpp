#include "stokes/report.hpp"

#include <algorithm>
#include <cmath>

namespace stokes {

bool Report::pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.pass; });
}

void Report::clearTimings() {
  for (auto& c : checks) c.millis = 0.0;
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

nlohmann::ordered_json toJson(const Report& r) {
  nlohmann::ordered_json j;
  j["version"] = r.version;
  j["suite"] = r.suite;
  j["pass"] = r.pass();
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["inputs"] = c.inputs;
    auto values = nlohmann::ordered_json::object();
    for (const auto& [label, v] : c.values) values[label] = v;
    cj["values"] = values;
    cj["residual"] = c.residual;
    cj["tolerance"] = c.tolerance;
    cj["pass"] = c.pass;
    cj["millis"] = c.millis;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

Report reportFromJson(const nlohmann::ordered_json& j) {
  Report r;
  r.version = j.at("version").get<std::string>();
  r.suite = j.at("suite").get<std::string>();
  for (const auto& cj : j.at("checks")) {
    CheckRecord c;
    c.name = cj.at("name").get<std::string>();
    c.inputs = cj.at("inputs").get<std::string>();
    for (const auto& [label, v] : cj.at("values").items())
      c.values.emplace_back(label, v.get<double>());
    c.residual = cj.at("residual").get<double>();
    c.tolerance = cj.at("tolerance").get<double>();
    c.pass = cj.at("pass").get<bool>();
    c.millis = cj.at("millis").get<double>();
    r.checks.push_back(std::move(c));
  }
  return r;
}

}  // namespace stokes
