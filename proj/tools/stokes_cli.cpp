#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stokes/alternating.hpp"
#include "stokes/chains.hpp"
#include "stokes/errors.hpp"
#include "stokes/exprlang.hpp"
#include "stokes/finindex.hpp"
#include "stokes/quadrature.hpp"
#include "stokes/singular.hpp"
#include "stokes/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct Common {
  int order = stokes::kDefaultOrder;
  std::string jsonPath;
  bool noTiming = false;
};

void addCommon(CLI::App* cmd, Common& c) {
  cmd->add_option("--order", c.order, "Gauss-Legendre nodes per axis")
      ->check(CLI::Range(1, stokes::kMaxOrder));
  cmd->add_option("--json", c.jsonPath, "Write the JSON report to PATH");
  cmd->add_flag("--no-timing", c.noTiming, "Zero wall-clock times in the report");
}

void printReport(const stokes::Report& r) {
  for (const auto& c : r.checks) {
    std::printf("%s  %-56s residual=%.3e tol=%.1e\n", c.pass ? "PASS" : "FAIL",
                c.name.c_str(), c.residual, c.tolerance);
    for (const auto& [label, v] : c.values)
      std::printf("        %s = %.12g\n", label.c_str(), v);
  }
  std::size_t passed = 0;
  for (const auto& c : r.checks) passed += c.pass ? 1 : 0;
  std::printf("%s: %zu/%zu checks passed\n", r.suite.c_str(), passed, r.checks.size());
}

int finish(stokes::Report r, const Common& c) {
  if (c.noTiming) r.clearTimings();
  printReport(r);
  if (!c.jsonPath.empty()) {
    std::ofstream out(c.jsonPath);
    if (!out) {
      std::cerr << "error: cannot write " << c.jsonPath << "\n";
      return kExitConfig;
    }
    out << stokes::toJson(r).dump(2) << "\n";
  }
  return r.pass() ? kExitPass : kExitFail;
}

struct IntegrateArgs {
  std::vector<std::string> map;
  std::vector<std::string> form;
  int degree = -1;
  int ambient = -1;
  int dim = -1;
  bool stokesLedger = false;
  std::vector<std::string> boxes;  // COEFF:LO0,LO1,..:HI0,HI1,..
};

std::vector<double> parseCorner(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    out.push_back(stokes::evalField(stokes::parse(text.substr(start, comma - start), 0), {}));
    start = comma + 1;
  }
  return out;
}

std::pair<long, stokes::BoxDomain> parseBoxEntry(const std::string& text) {
  const std::size_t a = text.find(':');
  const std::size_t b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos)
    throw stokes::PreconditionError("--box wants COEFF:LO0,LO1,..:HI0,HI1,.., got '" + text + "'");
  long coeff = 0;
  try {
    std::size_t used = 0;
    coeff = std::stol(text.substr(0, a), &used);
    if (used != a) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw stokes::PreconditionError("--box coefficient must be an integer in '" + text + "'");
  }
  return {coeff, stokes::BoxDomain(parseCorner(text.substr(a + 1, b - a - 1)),
                                   parseCorner(text.substr(b + 1)))};
}

/// Integer chain of boxes: every normalized term reports its own share.
stokes::Report runBoxChain(const IntegrateArgs& a, int order) {
  using namespace stokes;
  if (!a.map.empty()) throw PreconditionError("--box and --map are exclusive");
  BoxChain chain;
  for (const auto& text : a.boxes) {
    const auto [coeff, box] = parseBoxEntry(text);
    chain.add(box, coeff);
  }
  const int dim = a.boxes.empty() ? 0 : parseBoxEntry(a.boxes.front()).second.dim();
  if (dim > kMaxBoxDim)
    throw CostCapError("integrate is capped at dimension " + std::to_string(kMaxBoxDim));
  if (dim < 1) throw DimensionError("boxes need at least one coordinate");
  if (a.dim >= 0 && a.dim != dim) throw DimensionError("--dim disagrees with the boxes");
  const int degree = a.stokesLedger ? dim - 1 : dim;
  if (a.degree >= 0 && a.degree != degree)
    throw DimensionError("box chains take a " + std::to_string(degree) + "-form here");
  const AltFormField w(dim, degree, parseAll(a.form, dim));

  Report r;
  r.suite = "integrate";
  if (!a.stokesLedger) {
    double total = 0.0;
    for (const auto& [box, coeff] : chain.terms()) {
      const double v = integrateBox(w.coeffFields[0], box, order);
      total += static_cast<double>(coeff) * v;
      r.checks.push_back({"term " + std::to_string(coeff) + " x " + toString(box), a.form[0],
                          {{"integral", v}}, 0.0, 0.0, true, 0.0});
    }
    r.checks.push_back({"chain integral", a.form[0], {{"integral", total}}, 0.0, 0.0, true, 0.0});
    return r;
  }
  const CoordNForm cw = toCoordNForm(w);
  std::string inputs;
  for (std::size_t i = 0; i < a.form.size(); ++i) inputs += (i ? "; " : "") + a.form[i];
  for (const auto& [box, coeff] : chain.terms()) {
    const StokesSides s = boxStokes(cw, box, order);
    r.checks.push_back({"term " + std::to_string(coeff) + " x " + toString(box), inputs,
                        {{"interior", s.interior}, {"boundary", s.boundary}}, s.residual(), 1e-9,
                        s.residual() <= 1e-9, 0.0});
  }
  const ChainStokesSides s = chainStokes(chain, cw, order);
  r.checks.push_back({"chain Stokes", inputs, {{"interior", s.interior}, {"boundary", s.boundary}},
                      s.residual(), 1e-9, s.residual() <= 1e-9, 0.0});
  return r;
}

stokes::Report runIntegrate(const IntegrateArgs& a, int order) {
  using namespace stokes;
  if (!a.boxes.empty()) return runBoxChain(a, order);
  int dim = a.dim;
  if (dim < 0) {
    if (a.map.empty()) throw PreconditionError("--dim is required without --map");
    dim = static_cast<int>(a.map.size());
  }
  const int ambient = a.map.empty() ? (a.ambient < 0 ? dim : a.ambient)
                                    : static_cast<int>(a.map.size());
  if (dim > kMaxBoxDim || ambient > kMaxBoxDim)
    throw CostCapError("integrate is capped at dimension " + std::to_string(kMaxBoxDim) +
                       " (got dim " + std::to_string(dim) + ", ambient " +
                       std::to_string(ambient) + ")");
  if (dim < 1) throw DimensionError("--dim must be at least 1");
  if (a.ambient >= 0 && a.ambient != ambient)
    throw DimensionError("--ambient " + std::to_string(a.ambient) +
                         " disagrees with the map's " + std::to_string(ambient) +
                         " components");
  if (a.map.empty() && ambient != dim)
    throw DimensionError("the identity map needs ambient == dim; pass --map");
  const int degree = a.degree >= 0 ? a.degree : (a.stokesLedger ? dim - 1 : dim);
  if (degree < 0 || degree > ambient)
    throw DimensionError("form degree " + std::to_string(degree) + " out of range");
  const long expected = binomial(ambient, degree);
  if (static_cast<long>(a.form.size()) != expected)
    throw DimensionError("a " + std::to_string(degree) + "-form on R^" +
                         std::to_string(ambient) + " needs " + std::to_string(expected) +
                         " coefficients in lexicographic index-set order, got " +
                         std::to_string(a.form.size()));

  const SingularCube sigma{a.map.empty() ? SmoothMap::identity(dim)
                                         : SmoothMap(dim, parseAll(a.map, dim))};
  const AltFormField w(ambient, degree, parseAll(a.form, ambient));

  std::string inputs = "map [";
  for (std::size_t i = 0; i < a.map.size(); ++i) inputs += (i ? "; " : "") + a.map[i];
  inputs += a.map.empty() ? "identity]" : "]";
  inputs += " form [";
  for (std::size_t i = 0; i < a.form.size(); ++i) inputs += (i ? "; " : "") + a.form[i];
  inputs += "] degree " + std::to_string(degree) + " order " + std::to_string(order);

  Report r;
  r.suite = "integrate";
  CheckRecord c;
  c.inputs = inputs;
  if (!a.stokesLedger) {
    if (degree != dim)
      throw DimensionError("integrating over a " + std::to_string(dim) +
                           "-cube needs a " + std::to_string(dim) + "-form");
    c.name = "integral";
    c.values.emplace_back("integral", integrateForm(sigma, w, order));
    c.pass = true;
  } else {
    if (degree != dim - 1)
      throw DimensionError("--stokes needs a (dim-1)-form");
    const SingularStokesSides s = singularStokes(sigma, w, order);
    c.name = "singular Stokes";
    c.values.emplace_back("interior", s.interior);
    c.values.emplace_back("boundary", s.boundary);
    for (int i = 0; i < dim; ++i)
      for (int eps = 0; eps <= 1; ++eps)
        c.values.emplace_back("face " + std::to_string(i) + "," + std::to_string(eps),
                              s.faceTerms[static_cast<std::size_t>(2 * i + eps)]);
    c.residual = s.residual();
    c.tolerance = 1e-7;
    c.pass = c.residual <= c.tolerance;
  }
  r.checks.push_back(std::move(c));
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of Stokes' theorem for cubes, boxes and chains"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(stokes::kToolVersion));

  stokes::SuiteOptions opts;

  Common verifyCommon;
  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(stokes::suiteNames()));
  addCommon(verify, verifyCommon);
  verify->add_option("--max-n", opts.maxN, "Combinatorics range: i <= N, j <= N-1")
      ->check(CLI::Range(1, 64));
  verify->add_option("--seed", opts.seed, "Seed for randomized boxes and points");
  verify->add_option("--scenarios", opts.scenarioFile, "Classical scenario JSON file");

  Common demoCommon;
  std::string demo;
  auto* demoCmd = app.add_subcommand("demo", "Run a named demonstration");
  demoCmd->add_option("name", demo, "Demo name")
      ->required()
      ->check(CLI::IsMember(stokes::demoNames()));
  addCommon(demoCmd, demoCommon);
  demoCmd->add_option("--seed", opts.seed, "Seed for randomized boxes");

  Common integrateCommon;
  IntegrateArgs ia;
  auto* integrate = app.add_subcommand("integrate", "Integrate a form over a singular cube");
  integrate->add_option("--map", ia.map, "Component expressions of sigma (default identity)");
  integrate->add_option("--form", ia.form, "Form coefficients, lexicographic index sets")
      ->required();
  integrate->add_option("--degree", ia.degree, "Form degree k");
  integrate->add_option("--ambient", ia.ambient, "Ambient dimension m");
  integrate->add_option("--dim", ia.dim, "Cube dimension d");
  integrate->add_option("--box", ia.boxes,
                        "Box chain entry COEFF:LO0,LO1,..:HI0,HI1,.. (repeatable)");
  integrate->add_flag("--stokes", ia.stokesLedger,
                      "Treat the form as a (d-1)-form and print both Stokes sides");
  addCommon(integrate, integrateCommon);

  Common parityCommon;
  int parityMax = 12;
  auto* parity = app.add_subcommand("check-parity", "Exhaustive sign and parity checks");
  parity->add_option("--max-n", parityMax, "Check i <= N, j <= N-1")->check(CLI::Range(1, 64));
  addCommon(parity, parityCommon);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*verify) {
      opts.order = verifyCommon.order;
      return finish(stokes::runSuite(suite, opts), verifyCommon);
    }
    if (*demoCmd) {
      opts.order = demoCommon.order;
      return finish(stokes::runDemo(demo, opts), demoCommon);
    }
    if (*integrate) return finish(runIntegrate(ia, integrateCommon.order), integrateCommon);
    if (*parity) {
      opts.maxN = parityMax;
      std::printf("checking i <= %d, j <= %d, eps, eta in {0, 1}; face-of-face for box "
                  "dimensions 2..6\n",
                  parityMax, parityMax - 1);
      return finish(stokes::runSuite("combinatorics", opts), parityCommon);
    }
  } catch (const stokes::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
