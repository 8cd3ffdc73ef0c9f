#include "stokes/suites.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "stokes/alternating.hpp"
#include "stokes/catalog.hpp"
#include "stokes/chains.hpp"
#include "stokes/classical.hpp"
#include "stokes/coordform.hpp"
#include "stokes/exprlang.hpp"
#include "stokes/finindex.hpp"
#include "stokes/quadrature.hpp"
#include "stokes/singular.hpp"

namespace stokes {

namespace {

using Values = std::vector<std::pair<std::string, double>>;

struct Outcome {
  double residual = 0.0;
  Values values;
};

template <class Fn>
void runCheck(Report& report, std::string name, std::string inputs,
              double tolerance, Fn&& fn) {
  CheckRecord c;
  c.name = std::move(name);
  c.inputs = std::move(inputs);
  c.tolerance = tolerance;
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = fn();
    c.residual = o.residual;
    c.values = std::move(o.values);
    c.pass = std::isfinite(o.residual) && o.residual <= tolerance;
  } catch (const std::exception& e) {
    c.residual = std::numeric_limits<double>::max();
    c.inputs += " [error: " + std::string(e.what()) + "]";
    c.pass = false;
  }
  const auto stop = std::chrono::steady_clock::now();
  c.millis = std::chrono::duration<double, std::milli>(stop - start).count();
  report.checks.push_back(std::move(c));
}

std::string joinExprs(const std::vector<std::string>& exprs) {
  std::string out;
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    if (i) out += "; ";
    out += exprs[i];
  }
  return out;
}

// ---------------------------------------------------------------- box ----

Report boxSuite(const SuiteOptions& opt) {
  Report r;
  r.suite = "box";
  for (int n = 0; n <= 3; ++n) {
    std::mt19937_64 rng(opt.seed * 1000 + 100 + static_cast<unsigned>(n));
    for (const auto& entry : catalog::coordForms(n, 20)) {
      const BoxDomain b = catalog::randomBox(rng, n + 1, -1.0, 2.0);
      runCheck(r, "box-stokes n=" + std::to_string(n) + " " + entry.name,
               joinExprs(entry.exprs) + " on " + toString(b), 1e-9, [&] {
                 const StokesSides s = boxStokes(entry.form, b, opt.order);
                 return Outcome{s.residual(),
                                {{"interior", s.interior}, {"boundary", s.boundary}}};
               });
    }
    runCheck(r, "box-stokes constant form n=" + std::to_string(n), "all 2.5",
             1e-13, [&] {
               std::vector<ScalarField> c(static_cast<std::size_t>(n + 1),
                                          ScalarField::constant(n + 1, 2.5));
               const StokesSides s =
                   boxStokes(CoordNForm(n, c), BoxDomain::unit(n + 1), opt.order);
               return Outcome{std::max(s.residual(), std::abs(s.boundary)),
                              {{"interior", s.interior}, {"boundary", s.boundary}}};
             });
  }
  for (int order : {1, 2, 3, 5, 8, 16, 32}) {
    runCheck(r, "gl-exactness order=" + std::to_string(order),
             "x0^k x1^k x2^k on [0,1]^3, k = 2*order-1 and 2*order-2", 1e-12,
             [&] {
               double worst = 0.0;
               for (int k : {2 * order - 1, 2 * order - 2}) {
                 if (k < 0) continue;
                 const ScalarField mono = parse(
                     "x0^" + std::to_string(k) + "*x1^" + std::to_string(k) +
                         "*x2^" + std::to_string(k),
                     3);
                 const double exact = std::pow(1.0 / (k + 1), 3);
                 const double got = integrateBox(mono, BoxDomain::unit(3), order);
                 worst = std::max(worst, std::abs(got - exact) / std::abs(exact));
               }
               const ScalarField odd =
                   parse("x0^" + std::to_string(2 * order - 1), 1);
               worst = std::max(worst, std::abs(integrateBox(
                                           odd, BoxDomain({-1.0}, {1.0}), order)));
               return Outcome{worst, {}};
             });
  }
  return r;
}

// ------------------------------------------------------------- bridge ----

Report bridgeSuite(const SuiteOptions& opt) {
  Report r;
  r.suite = "bridge";
  std::mt19937_64 rng(opt.seed * 1000 + 200);
  for (int n = 1; n <= 3; ++n) {
    for (const auto& entry : catalog::altForms(n + 1, n, 5)) {
      std::vector<Point> pts;
      for (int p = 0; p < 100; ++p)
        pts.push_back(catalog::randomPoint(rng, n + 1, -1.0, 2.0));
      runCheck(r, "bridge n=" + std::to_string(n) + " " + entry.name,
               joinExprs(entry.exprs) + " at 100 points", 1e-8, [&] {
                 double worst = 0.0;
                 for (const auto& x : pts)
                   worst = std::max(worst, bridgeResidual(entry.form, x));
                 return Outcome{worst, {}};
               });
    }
  }
  for (int m = 2; m <= 4; ++m)
    for (int k = 0; k + 1 <= m - 1; ++k) {
      for (const auto& entry : catalog::altForms(m, k, 3)) {
        std::vector<Point> pts;
        std::vector<std::vector<Point>> vecs;
        for (int p = 0; p < 20; ++p) {
          pts.push_back(catalog::randomPoint(rng, m, -1.0, 2.0));
          std::vector<Point> v;
          for (int j = 0; j <= k; ++j) v.push_back(catalog::randomPoint(rng, m, -1.0, 1.0));
          vecs.push_back(std::move(v));
        }
        runCheck(r, "d-two-routes m=" + std::to_string(m) + " k=" + std::to_string(k) +
                        " " + entry.name,
                 joinExprs(entry.exprs) + " at 20 points", 1e-9, [&] {
                   double worst = 0.0;
                   for (std::size_t p = 0; p < pts.size(); ++p) {
                     const double a = evaluateAlt(extDerivField(entry.form, pts[p]), vecs[p]);
                     const double b = extDerivByEvaluation(entry.form, pts[p], vecs[p]);
                     worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(a)));
                   }
                   return Outcome{worst, {}};
                 });
      }
    }
  for (int m = 2; m <= 4; ++m)
    for (int k = 0; k + 2 <= m; ++k) {
      for (const auto& entry : catalog::altForms(m, k, 3)) {
        std::vector<Point> pts;
        for (int p = 0; p < 100; ++p)
          pts.push_back(catalog::randomPoint(rng, m, -1.0, 2.0));
        runCheck(r, "dd-zero m=" + std::to_string(m) + " k=" + std::to_string(k) +
                        " " + entry.name,
                 joinExprs(entry.exprs) + " at 100 points", 1e-7, [&] {
                   double worst = 0.0;
                   for (const auto& x : pts)
                     worst = std::max(worst, ddResidual(entry.form, x));
                   return Outcome{worst, {}};
                 });
      }
    }
  for (int n = 0; n <= 3; ++n) {
    const auto forms = catalog::coordForms(n, 6);
    for (std::size_t e = 0; e < forms.size(); ++e) {
      const std::string fexpr = catalog::smoothExpr(n + 1, static_cast<int>(e) + 3, 7);
      runCheck(r, "leibniz n=" + std::to_string(n) + " " + forms[e].name,
               "f = " + fexpr + "; w = " + joinExprs(forms[e].exprs), 1e-10, [&] {
                 const ScalarField f = parse(fexpr, n + 1);
                 double worst = 0.0;
                 for (int p = 0; p < 20; ++p) {
                   const Point x = catalog::randomPoint(rng, n + 1, -1.0, 2.0);
                   worst = std::max(worst, leibnizResidual(f, forms[e].form, x));
                 }
                 return Outcome{worst, {}};
               });
    }
  }
  for (int dim = 1; dim <= 4; ++dim) {
    runCheck(r, "ad-vs-fd dim=" + std::to_string(dim),
             "12 catalog fields x 100 points, h = 1e-5", 1e-6, [&] {
               double worst = 0.0;
               for (int e = 0; e < 12; ++e) {
                 const ScalarField f = parse(catalog::smoothExpr(dim, e, 0), dim);
                 const SmoothMap single(dim, {f});
                 for (int p = 0; p < 100; ++p) {
                   const Point x = catalog::randomPoint(rng, dim, -1.0, 2.0);
                   const std::vector<double> g = gradient(f, x);
                   const Matrix fd = fdJacobian(single, x, 1e-5);
                   double gmax = 0.0;
                   double diff = 0.0;
                   for (int c = 0; c < dim; ++c) {
                     gmax = std::max(gmax, std::abs(g[c]));
                     diff = std::max(diff, std::abs(g[c] - fd(0, c)));
                   }
                   worst = std::max(worst, diff / (1.0 + gmax));
                 }
               }
               return Outcome{worst, {}};
             });
  }
  return r;
}

// ----------------------------------------------------------- singular ----

Report annulusReport(const SuiteOptions& opt) {
  Report r;
  r.suite = "annulus";
  const auto sigma = catalog::annulus();
  const double threePi = 3.0 * std::numbers::pi;
  runCheck(r, "annulus area via pullback of dx^dy",
           joinExprs(sigma.exprs) + "; form dx^dy", 1e-8, [&] {
             const double v = integrateForm(sigma.cube, catalog::areaForm().form, opt.order);
             return Outcome{std::abs(v - threePi), {{"integral", v}, {"3pi", threePi}}};
           });
  const auto w = catalog::annulusForm();
  const SingularStokesSides s = singularStokes(sigma.cube, w.form, opt.order);
  runCheck(r, "annulus interior side", joinExprs(w.exprs), 1e-8, [&] {
    return Outcome{std::abs(s.interior - threePi), {{"interior", s.interior}}};
  });
  runCheck(r, "annulus four-edge side", joinExprs(w.exprs), 1e-8, [&] {
    return Outcome{std::abs(s.boundary - threePi),
                   {{"boundary", s.boundary},
                    {"r=0", s.faceTerms[0]},
                    {"r=1", s.faceTerms[1]},
                    {"theta=0", s.faceTerms[2]},
                    {"theta=1", s.faceTerms[3]}}};
  });
  runCheck(r, "annulus theta-edges cancel", joinExprs(w.exprs), 1e-9, [&] {
    const double net = s.faceTerms[3] - s.faceTerms[2];
    return Outcome{std::abs(net), {{"theta=1 minus theta=0", net}}};
  });
  runCheck(r, "annulus singular Stokes", joinExprs(w.exprs), 1e-8, [&] {
    return Outcome{s.residual(), {{"interior", s.interior}, {"boundary", s.boundary}}};
  });
  // For 1/2 (x dy - y dx) each theta-edge vanishes on its own; these do not.
  for (const auto& g : catalog::gentleAltForms(2, 1, 2)) {
    runCheck(r, "annulus theta-edges cancel " + g.name, joinExprs(g.exprs), 1e-9, [&] {
      const SingularStokesSides t = singularStokes(sigma.cube, g.form, opt.order);
      return Outcome{std::abs(t.faceTerms[3] - t.faceTerms[2]),
                     {{"theta=0", t.faceTerms[2]}, {"theta=1", t.faceTerms[3]}}};
    });
  }
  return r;
}

Report singularSuite(const SuiteOptions& opt) {
  Report r = annulusReport(opt);
  r.suite = "singular";
  std::mt19937_64 rng(opt.seed * 1000 + 300);
  for (int d = 1; d <= 3; ++d) {
    for (const auto& cube : catalog::cubes(d)) {
      const int m = cube.cube.ambient();
      const auto forms = cube.name == "annulus" ? catalog::gentleAltForms(m, d - 1, 2)
                                                : catalog::altForms(m, d - 1, 2);
      for (const auto& w : forms) {
        const std::string inputs = cube.name + " <- " + joinExprs(w.exprs);
        std::vector<Point> pts;
        for (int p = 0; p < 50; ++p) pts.push_back(catalog::randomPoint(rng, d - 1, -0.5, 1.5));
        runCheck(r, "face-matching " + cube.name + " " + w.name, inputs, 1e-9, [&] {
          double worst = 0.0;
          for (int i = 0; i < d; ++i)
            for (int eps = 0; eps <= 1; ++eps)
              for (const auto& x : pts)
                worst = std::max(worst, faceMatchingResidual(cube.cube, w.form, i, eps, x));
          return Outcome{worst, {}};
        });
        runCheck(r, "singular-stokes " + cube.name + " " + w.name, inputs, 1e-7, [&] {
          const SingularStokesSides s = singularStokes(cube.cube, w.form, opt.order);
          return Outcome{s.residual(), {{"interior", s.interior}, {"boundary", s.boundary}}};
        });
        if (d >= 2) {
          runCheck(r, "pullback-naturality " + cube.name + " " + w.name, inputs, 1e-7, [&] {
            double worst = 0.0;
            for (int p = 0; p < 10; ++p) {
              const Point x = catalog::randomPoint(rng, d, -0.5, 1.5);
              worst = std::max(worst, pullbackNaturalityResidual(cube.cube, w.form, x));
            }
            return Outcome{worst, {}};
          });
        }
      }
    }
  }
  for (int d = 1; d <= 3; ++d) {
    const auto w = catalog::altForms(d, d - 1, 1).front();
    runCheck(r, "identity cube recovers box Stokes d=" + std::to_string(d),
             joinExprs(w.exprs), 1e-10, [&] {
               const SingularStokesSides s =
                   singularStokes(catalog::identityCube(d).cube, w.form, opt.order);
               const StokesSides b =
                   boxStokes(toCoordNForm(w.form), BoxDomain::unit(d), opt.order);
               return Outcome{std::max(std::abs(s.interior - b.interior),
                                       std::abs(s.boundary - b.boundary)),
                              {{"singular", s.interior}, {"box", b.interior}}};
             });
  }
  return r;
}

// -------------------------------------------------------------- chains ----

CubeRegistry chainRegistry() {
  CubeRegistry reg;
  for (int d = 2; d <= 6; ++d) {
    reg.add("id" + std::to_string(d), {SmoothMap::identity(d)});
    std::vector<std::string> exprs;
    for (int k = 0; k < d; ++k)
      exprs.push_back("x" + std::to_string(k) + " + 0.1*x" +
                      std::to_string((k + 1) % d) + "^2");
    reg.add("bent" + std::to_string(d), {SmoothMap(d, parseAll(exprs, d))});
  }
  reg.add("annulus", catalog::annulus().cube);
  reg.add("poly3->4", catalog::polynomialCube3to4().cube);
  return reg;
}

Report chainsSuite(const SuiteOptions& opt) {
  Report r;
  r.suite = "chains";
  const CubeRegistry reg = chainRegistry();
  for (const auto& id : reg.ids()) {
    const int d = reg.at(id).dim();
    runCheck(r, "boundary-squared " + id, "dimension " + std::to_string(d), 0.0, [&] {
      const SingularChain c = SingularChain::single({id, {}}, d);
      const SingularChain b = boundary(c, reg);
      const SingularChain bb = boundary(b, reg);
      return Outcome{static_cast<double>(bb.size()),
                     {{"boundary terms", static_cast<double>(b.size())},
                      {"double boundary terms", static_cast<double>(bb.size())}}};
    });
  }
  runCheck(r, "double-boundary integral poly3->4", "w = catalog 1-form on R^4", 0.0, [&] {
    const auto w = catalog::altForms(4, 1, 1).front();
    return Outcome{doubleBoundaryIntegralZero({"poly3->4", {}}, w.form, reg, opt.order), {}};
  });
  for (const std::string id : {"annulus", "poly3->4"}) {
    const int d = reg.at(id).dim();
    const int m = reg.at(id).ambient();
    const auto w = catalog::altForms(m, d - 1, 1).front();
    runCheck(r, "chain boundary integral matches face sum " + id, joinExprs(w.exprs), 1e-9,
             [&] {
               const SingularChain b = boundary(SingularChain::single({id, {}}, d), reg);
               const double viaChain = integrateChain(b, w.form, reg, opt.order);
               const SingularStokesSides s = singularStokes(reg.at(id), w.form, opt.order);
               return Outcome{std::abs(viaChain - s.boundary),
                              {{"chain", viaChain}, {"faces", s.boundary}, {"interior", s.interior}}};
             });
  }
  runCheck(r, "integrateChain additivity and scaling", "annulus faces, 1-form", 1e-12, [&] {
    const auto w = catalog::annulusForm();
    const SingularChain b = boundary(SingularChain::single({"annulus", {}}, 2), reg);
    SingularChain c1(1);
    SingularChain c2(1);
    int idx = 0;
    for (const auto& [t, k] : b.terms()) (idx++ % 2 == 0 ? c1 : c2).add(t, k);
    const double i1 = integrateChain(c1, w.form, reg, opt.order);
    const double i2 = integrateChain(c2, w.form, reg, opt.order);
    const double sum = integrateChain(c1 + c2, w.form, reg, opt.order);
    const double scaled = integrateChain(-3 * c1, w.form, reg, opt.order);
    return Outcome{std::max(std::abs(sum - (i1 + i2)), std::abs(scaled + 3.0 * i1)),
                   {{"c1", i1}, {"c2", i2}, {"c1+c2", sum}, {"-3 c1", scaled}}};
  });
  for (int n = 0; n <= 3; ++n) {
    const auto w = catalog::coordForms(n, 6)[static_cast<std::size_t>(n + 1)];
    for (int axis = 0; axis <= n; ++axis) {
      const auto [left, right] = splitBox(BoxDomain::unit(n + 1), axis, 0.5);
      const std::string tag = "n=" + std::to_string(n) + " axis=" + std::to_string(axis);
      runCheck(r, "two-box chain Stokes " + tag, joinExprs(w.exprs), 1e-9, [&] {
        BoxChain bc;
        bc.add(left, 1);
        bc.add(right, 1);
        const ChainStokesSides s = chainStokes(bc, w.form, opt.order);
        return Outcome{s.residual(), {{"interior", s.interior}, {"boundary", s.boundary}}};
      });
      runCheck(r, "shared face cancels " + tag, joinExprs(w.exprs), 1e-12, [&] {
        return Outcome{sharedFaceResidual(left, right, axis, w.form, opt.order), {}};
      });
      runCheck(r, "merged boundary " + tag, joinExprs(w.exprs), 1e-9, [&] {
        return Outcome{mergedBoundaryResidual(left, right, axis, w.form, opt.order), {}};
      });
    }
  }
  return r;
}

// ------------------------------------------------------- combinatorics ----

Report combinatoricsSuite(const SuiteOptions& opt) {
  Report r;
  r.suite = "combinatorics";
  const int maxN = opt.maxN;
  runCheck(r, "sign cancellation and parity",
           "i <= " + std::to_string(maxN) + ", j <= " + std::to_string(maxN - 1) +
               ", all (eps, eta)",
           0.0, [&] {
             const ExhaustiveSummary s = checkSignCancellation(maxN, maxN - 1);
             return Outcome{static_cast<double>(s.failures),
                            {{"tuples", static_cast<double>(s.tuplesChecked)}}};
           });
  runCheck(r, "succAbove increasing and skips i", "i, k <= " + std::to_string(maxN), 0.0,
           [&] {
             long failures = 0;
             for (int i = 0; i <= maxN; ++i) {
               std::set<int> hit;
               for (int k = 0; k < maxN; ++k) {
                 if (k > 0 && succAbove(i, k) <= succAbove(i, k - 1)) ++failures;
                 hit.insert(succAbove(i, k));
               }
               if (hit.count(i) && i < maxN) ++failures;
               for (int v = 0; v <= maxN; ++v)
                 if (v != i && !hit.count(v)) ++failures;
             }
             return Outcome{static_cast<double>(failures), {}};
           });
  runCheck(r, "face-of-face exhaustive", "box dimensions 2..6", 0.0, [&] {
    const ExhaustiveSummary s = checkFaceOfFace(2, 6);
    return Outcome{static_cast<double>(s.failures),
                   {{"pairs", static_cast<double>(s.tuplesChecked)}}};
  });
  runCheck(r, "face-of-face randomized boxes", "1000 boxes, dimensions 2..6", 0.0, [&] {
    std::mt19937_64 rng(opt.seed * 1000 + 400);
    long failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int d = 2 + trial % 5;
      const BoxDomain b = catalog::randomBox(rng, d, -5.0, 5.0);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d - 1; ++j) {
          const auto [p1, p2] = faceOfFaceBox(b, i, j);
          if (p1 != p2) ++failures;
        }
    }
    return Outcome{static_cast<double>(failures), {}};
  });
  runCheck(r, "codimension-2 slots reached twice", "box dimensions 2..8", 0.0, [&] {
    long failures = 0;
    for (int d = 2; d <= 8; ++d) {
      std::map<std::pair<int, int>, int> hits;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d - 1; ++j) {
          const int a = i;
          const int b = succAbove(i, j);
          hits[{std::min(a, b), std::max(a, b)}]++;
        }
      if (static_cast<long>(hits.size()) != binomial(d, 2)) ++failures;
      for (const auto& [slot, count] : hits)
        if (count != 2) ++failures;
    }
    return Outcome{static_cast<double>(failures), {}};
  });
  return r;
}

// ---------------------------------------------------------- classical ----

Report classicalSuite(const SuiteOptions& opt) {
  const std::vector<Scenario> scenarios =
      opt.scenarioFile.empty() ? defaultScenarios() : loadScenarios(opt.scenarioFile);
  Report r = runScenarios(scenarios, opt.order);
  r.suite = "classical";
  return r;
}

// -------------------------------------------------------------- demos ----

Report boxDemo(const std::string& name, int n, int order, int maxDegree, double tol,
               int maxDim, const SuiteOptions& opt) {
  Report r;
  r.suite = name;
  std::mt19937_64 rng(opt.seed * 1000 + 500 + static_cast<unsigned>(n));
  for (const auto& entry : catalog::polynomialCoordForms(n, 3, maxDegree)) {
    const BoxDomain b = catalog::randomBox(rng, n + 1, -1.0, 2.0);
    runCheck(r, name + " " + entry.name,
             "order " + std::to_string(order) + "; " + joinExprs(entry.exprs), tol, [&] {
               const StokesSides s = boxStokes(entry.form, b, order, maxDim);
               return Outcome{s.residual(),
                              {{"interior", s.interior}, {"boundary", s.boundary}}};
             });
  }
  return r;
}

double parseBound(const nlohmann::json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return evalField(parse(v.get<std::string>(), 0), {});
  throw PreconditionError("scenario bounds must be numbers or constant expressions");
}

}  // namespace

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names = {
      "box", "singular", "bridge", "chains", "combinatorics", "classical", "all"};
  return names;
}

const std::vector<std::string>& demoNames() {
  static const std::vector<std::string> names = {"annulus", "box4d", "box5d", "box10d"};
  return names;
}

Report runSuite(const std::string& name, const SuiteOptions& opt) {
  if (name == "box") return boxSuite(opt);
  if (name == "singular") return singularSuite(opt);
  if (name == "bridge") return bridgeSuite(opt);
  if (name == "chains") return chainsSuite(opt);
  if (name == "combinatorics") return combinatoricsSuite(opt);
  if (name == "classical") return classicalSuite(opt);
  if (name == "all") {
    Report all;
    all.suite = "all";
    for (const auto& s : suiteNames())
      if (s != "all") all.append(runSuite(s, opt));
    return all;
  }
  throw IndexError("unknown suite '" + name + "'");
}

Report runDemo(const std::string& name, const SuiteOptions& opt) {
  if (name == "annulus") return annulusReport(opt);
  // Per-axis degree 3 keeps every reduced order exact.
  if (name == "box4d") return boxDemo(name, 3, opt.order, 3, 1e-9, kMaxBoxDim, opt);
  if (name == "box5d") return boxDemo(name, 4, 8, 3, 1e-9, kMaxBoxDim, opt);
  if (name == "box10d") return boxDemo(name, 9, 3, 3, 1e-8, 10, opt);
  throw IndexError("unknown demo '" + name + "'");
}

std::vector<Scenario> defaultScenarios() {
  const double halfPi = std::numbers::pi / 2.0;
  std::vector<Scenario> s;
  s.push_back({"ftc sin on [0, pi/2]", "ftc", {"sin(x0)"}, {0.0}, {halfPi}, 1e-12, true, 1.0});
  s.push_back({"ftc x^2 on [0, 1]", "ftc", {"x0^2"}, {0.0}, {1.0}, 1e-12, true, 1.0});
  s.push_back({"ftc constant", "ftc", {"5"}, {-1.0}, {2.0}, 1e-12, true, 0.0});
  s.push_back({"ftc paths exp on [0, 1]", "ftc_paths", {"exp(x0)"}, {0.0}, {1.0}, 1e-10});
  s.push_back({"ftc paths x on [-1, 3]", "ftc_paths", {"x0"}, {-1.0}, {3.0}, 1e-13});
  s.push_back({"ftc paths sin(5x) on [0, 2]", "ftc_paths", {"sin(5*x0)"}, {0.0}, {2.0}, 1e-9});
  s.push_back({"green area form", "green", {"-x1/2", "x0/2"}, {0.0, 0.0}, {1.0, 1.0},
               1e-12, true, 1.0});
  s.push_back({"green P = xy", "green", {"x0*x1", "0"}, {0.0, 0.0}, {1.0, 1.0}, 1e-10,
               true, -0.5});
  s.push_back({"green constants", "green", {"3", "-2"}, {0.0, 0.0}, {1.0, 1.0}, 1e-12,
               true, 0.0});
  s.push_back({"green trig", "green", {"sin(x0*x1)", "exp(x0)*cos(x1)"}, {-0.5, 0.0},
               {1.0, 2.0}, 1e-10});
  s.push_back({"divergence identity field", "divergence", {"x0", "x1", "x2"},
               {0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}, 1e-12, true, 3.0});
  s.push_back({"divergence constant field", "divergence", {"1", "-2", "0.5"},
               {0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}, 1e-12, true, 0.0});
  s.push_back({"gauss 3d trig", "divergence",
               {"sin(x1)*exp(x0)", "cos(x0*x2) + x1^3", "x2*sin(x0 + x1)"},
               {-0.5, 0.0, -1.0}, {1.0, 1.5, 0.5}, 1e-9});
  s.push_back({"ibp x e^x on [0, 1]", "ibp", {"x0", "exp(x0)"}, {0.0}, {1.0}, 1e-11, true,
               1.0});
  s.push_back({"ibp f = 1", "ibp", {"1", "sin(x0)"}, {0.0}, {2.0}, 1e-11});
  s.push_back({"ibp g = 1", "ibp", {"x0^3 - x0", "1"}, {-1.0}, {2.0}, 1e-11, true, 0.0});
  return s;
}

std::vector<Scenario> scenariosFromJson(const nlohmann::json& j) try {
  std::vector<Scenario> out;
  for (const auto& sj : j.at("scenarios")) {
    Scenario s;
    s.name = sj.at("name").get<std::string>();
    s.kind = sj.at("kind").get<std::string>();
    s.exprs = sj.at("exprs").get<std::vector<std::string>>();
    for (const auto& v : sj.at("lo")) s.lo.push_back(parseBound(v));
    for (const auto& v : sj.at("hi")) s.hi.push_back(parseBound(v));
    s.tolerance = sj.at("tolerance").get<double>();
    if (sj.contains("expected")) {
      s.hasExpected = true;
      s.expected = parseBound(sj.at("expected"));
    }
    out.push_back(std::move(s));
  }
  return out;
} catch (const nlohmann::json::exception& e) {
  throw PreconditionError(std::string("malformed scenario: ") + e.what());
}

nlohmann::ordered_json scenariosToJson(const std::vector<Scenario>& scenarios) {
  nlohmann::ordered_json j;
  j["version"] = kToolVersion;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : scenarios) {
    nlohmann::ordered_json sj;
    sj["name"] = s.name;
    sj["kind"] = s.kind;
    sj["exprs"] = s.exprs;
    sj["lo"] = s.lo;
    sj["hi"] = s.hi;
    sj["tolerance"] = s.tolerance;
    if (s.hasExpected) sj["expected"] = s.expected;
    arr.push_back(std::move(sj));
  }
  j["scenarios"] = std::move(arr);
  return j;
}

std::vector<Scenario> loadScenarios(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open scenario file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError("scenario file '" + path + "': " + e.what());
  }
  return scenariosFromJson(j);
}

Report runScenarios(const std::vector<Scenario>& scenarios, int order) {
  Report r;
  r.suite = "classical";
  for (const auto& s : scenarios) {
    const std::string inputs = s.kind + ": " + joinExprs(s.exprs) + " on " +
                               toString(BoxDomain(s.lo, s.hi));
    runCheck(r, s.name, inputs, s.tolerance, [&]() -> Outcome {
      const int dim = static_cast<int>(s.lo.size());
      auto expectGap = [&](double v) { return s.hasExpected ? std::abs(v - s.expected) : 0.0; };
      if (s.kind == "ftc" || s.kind == "ftc_paths") {
        if (s.exprs.size() != 1 || dim != 1)
          throw DimensionError("ftc scenarios need one expression on an interval");
        const ScalarField f = parse(s.exprs[0], 1);
        if (s.kind == "ftc") {
          const FtcResult res = ftcCheck(f, s.lo[0], s.hi[0], order);
          return {std::max({res.stokesResidual(), res.boundaryResidual(),
                            expectGap(res.boundary)}),
                  {{"interior", res.interior},
                   {"boundary", res.boundary},
                   {"f(b)-f(a)", res.closedForm}}};
        }
        const FtcPathsResult res = ftcPathsAgree(f, s.lo[0], s.hi[0], order);
        return {res.residual(),
                {{"gauss-legendre", res.stokesPath}, {"simpson", res.simpsonPath}}};
      }
      if (s.kind == "green") {
        if (s.exprs.size() != 2 || dim != 2)
          throw DimensionError("green scenarios need P, Q on a rectangle");
        const GreenResult res = greenCheck(parse(s.exprs[0], 2), parse(s.exprs[1], 2),
                                           BoxDomain(s.lo, s.hi), order);
        return {std::max({res.boundaryResidual(), res.fourEdgeResidual(),
                          res.formulationGap(), expectGap(res.interior)}),
                {{"interior", res.interior},
                 {"boundary", res.boundary},
                 {"four-edge", res.fourEdge}}};
      }
      if (s.kind == "divergence") {
        if (static_cast<int>(s.exprs.size()) != dim)
          throw DimensionError("divergence scenarios need one component per axis");
        const DivergenceResult res =
            divergenceCheck(SmoothMap(dim, parseAll(s.exprs, dim)), BoxDomain(s.lo, s.hi), order);
        return {std::max({res.residual(), res.formResidual(), expectGap(res.interior)}),
                {{"interior", res.interior}, {"flux", res.flux}, {"form", res.viaForm}}};
      }
      if (s.kind == "ibp") {
        if (s.exprs.size() != 2 || dim != 1)
          throw DimensionError("ibp scenarios need f, g on an interval");
        const IbpResult res =
            ibpCheck(parse(s.exprs[0], 1), parse(s.exprs[1], 1), s.lo[0], s.hi[0], order);
        return {std::max(res.residual(), expectGap(res.lhs)),
                {{"lhs", res.lhs}, {"rhs", res.rhs}}};
      }
      throw PreconditionError("unknown scenario kind '" + s.kind + "'");
    });
  }
  return r;
}

}  // namespace stokes
