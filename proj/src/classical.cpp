#include "stokes/classical.hpp"

#include <cmath>
#include <string>

namespace stokes {

namespace {

void requireInterval(double a, double b) {
  if (!(a <= b)) throw PreconditionError("interval needs a <= b");
}

void requireDim(const ScalarField& f, int dim, const char* name) {
  if (f.dim() != dim)
    throw DimensionError(std::string(name) + " must have dimension " +
                         std::to_string(dim));
}

double simpsonStep(const std::function<double(double)>& g, double a, double b,
                   double fa, double fm, double fb, double whole, double tol,
                   int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = g(lm);
  const double frm = g(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0)
    throw EvaluationError("adaptive Simpson did not converge on [" +
                          std::to_string(a) + ", " + std::to_string(b) + "]");
  return simpsonStep(g, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpsonStep(g, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double FtcResult::stokesResidual() const { return std::abs(interior - boundary); }
double FtcResult::boundaryResidual() const {
  return std::abs(boundary - closedForm);
}

FtcResult ftcCheck(const ScalarField& f, double a, double b, int order) {
  requireInterval(a, b);
  requireDim(f, 1, "FTC integrand");
  const CoordNForm w(0, {f});
  const BoxDomain interval({a}, {b});
  FtcResult r;
  r.interior = integrateBox(extDerivCoord(w), interval, order);
  r.boundary = bdryIntegral(w, interval, order);
  r.closedForm = evalField(f, {b}) - evalField(f, {a});
  return r;
}

double adaptiveSimpson(const std::function<double(double)>& g, double a,
                       double b, double tol, int maxDepth) {
  if (a == b) return 0.0;
  const double fa = g(a);
  const double fb = g(b);
  const double fm = g(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpsonStep(g, a, b, fa, fm, fb, whole, tol, maxDepth);
}

double FtcPathsResult::residual() const {
  return std::abs(stokesPath - simpsonPath);
}

FtcPathsResult ftcPathsAgree(const ScalarField& f, double a, double b,
                             int order) {
  requireInterval(a, b);
  requireDim(f, 1, "FTC integrand");
  FtcPathsResult r;
  r.stokesPath =
      integrateBox(extDerivCoord(CoordNForm(0, {f})), BoxDomain({a}, {b}), order);
  r.simpsonPath = adaptiveSimpson(
      [&f](double t) { return gradient(f, {t})[0]; }, a, b, 1e-12, 30);
  return r;
}

double GreenResult::boundaryResidual() const {
  return std::abs(interior - boundary);
}
double GreenResult::fourEdgeResidual() const {
  return std::abs(interior - fourEdge);
}
double GreenResult::formulationGap() const {
  return std::abs(boundary - fourEdge);
}

GreenResult greenCheck(const ScalarField& p, const ScalarField& q,
                       const BoxDomain& rect, int order) {
  requireDim(p, 2, "P");
  requireDim(q, 2, "Q");
  if (rect.dim() != 2) throw DimensionError("Green needs a rectangle");
  // Coordinate convention: omega_0 = Q (coefficient of dx_1), omega_1 = P.
  const CoordNForm w(1, {q, p});
  GreenResult r;
  r.interior = integrateBox(extDerivCoord(w), rect, order);
  r.boundary = bdryIntegral(w, rect, order);
  // P dx + Q dy around the rectangle, counterclockwise.
  const double right = faceIntegral(q, rect, 0, rect.hi[0], order);
  const double left = faceIntegral(q, rect, 0, rect.lo[0], order);
  const double top = faceIntegral(p, rect, 1, rect.hi[1], order);
  const double bottom = faceIntegral(p, rect, 1, rect.lo[1], order);
  r.fourEdge = right - left - top + bottom;
  return r;
}

double DivergenceResult::residual() const { return std::abs(interior - flux); }
double DivergenceResult::formResidual() const {
  return std::abs(interior - viaForm);
}

DivergenceResult divergenceCheck(const SmoothMap& field, const BoxDomain& b,
                                 int order) {
  const int d = field.domainDim();
  if (field.codomainDim() != d || b.dim() != d)
    throw DimensionError("divergence needs F: R^d -> R^d on a d-box");
  std::vector<ScalarField> omega;
  for (int i = 0; i < d; ++i)
    omega.push_back(i % 2 == 0 ? field.component(i) : -field.component(i));
  const CoordNForm w(d - 1, omega);
  const ScalarField div = ScalarField::generic(d, [field](auto x) {
    using S = typename decltype(x)::value_type;
    S acc(0.0);
    for (int i = 0; i < field.codomainDim(); ++i)
      acc = acc + partialAt<S>(field.component(i), x, i);
    return acc;
  });
  DivergenceResult r;
  r.interior = integrateBox(div, b, order);
  for (int i = 0; i < d; ++i)
    r.flux += faceIntegral(field.component(i), b, i, b.hi[i], order) -
              faceIntegral(field.component(i), b, i, b.lo[i], order);
  r.viaForm = bdryIntegral(w, b, order);
  return r;
}

double IbpResult::residual() const { return std::abs(lhs - rhs); }

IbpResult ibpCheck(const ScalarField& f, const ScalarField& g, double a,
                   double b, int order) {
  requireInterval(a, b);
  requireDim(f, 1, "f");
  requireDim(g, 1, "g");
  const BoxDomain interval({a}, {b});
  IbpResult r;
  r.lhs = integrateBox(f * partialField(g, 0), interval, order);
  // Boundary term from Stokes on the 0-form f g.
  const double boundaryTerm = bdryIntegral(CoordNForm(0, {f * g}), interval, order);
  r.rhs = boundaryTerm - integrateBox(partialField(f, 0) * g, interval, order);
  return r;
}

}  // namespace stokes
