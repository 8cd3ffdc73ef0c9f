#include "stokes/coordform.hpp"

#include <cmath>
#include <string>

namespace stokes {

namespace {

void requireSameDegree(const CoordNForm& a, const CoordNForm& b) {
  if (a.n != b.n)
    throw DimensionError("coordinate forms have different degrees (" +
                         std::to_string(a.n) + " vs " + std::to_string(b.n) +
                         ")");
}

}  // namespace

CoordNForm::CoordNForm(int degree, std::vector<ScalarField> fields)
    : n(degree), coeffs(std::move(fields)) {
  if (n < 0) throw DimensionError("coordinate form degree must be >= 0");
  if (static_cast<int>(coeffs.size()) != n + 1)
    throw DimensionError("coordinate " + std::to_string(n) + "-form needs " +
                         std::to_string(n + 1) + " coefficients, got " +
                         std::to_string(coeffs.size()));
  for (const auto& c : coeffs)
    if (c.dim() != n + 1)
      throw DimensionError("coefficient field has dimension " +
                           std::to_string(c.dim()) + ", expected " +
                           std::to_string(n + 1));
}

ScalarField signedCoeff(const CoordNForm& w, int i) {
  if (i < 0 || i > w.n)
    throw IndexError("signed coefficient index " + std::to_string(i) +
                     " out of range 0.." + std::to_string(w.n));
  if (i % 2 == 0) return w.coeffs[i];
  return -w.coeffs[i];
}

ScalarField extDerivCoord(const CoordNForm& w) {
  return ScalarField::generic(w.ambient(), [w](auto x) {
    using S = typename decltype(x)::value_type;
    S acc(0.0);
    for (int i = 0; i <= w.n; ++i) {
      const S p = partialAt<S>(w.coeffs[i], x, i);
      acc = (i % 2 == 0) ? acc + p : acc - p;
    }
    return acc;
  });
}

CoordNForm zeroForm(int n) {
  std::vector<ScalarField> c;
  for (int i = 0; i <= n; ++i) c.push_back(ScalarField::constant(n + 1, 0.0));
  return CoordNForm(n, std::move(c));
}

CoordNForm addForms(const CoordNForm& a, const CoordNForm& b) {
  requireSameDegree(a, b);
  std::vector<ScalarField> c;
  for (int i = 0; i <= a.n; ++i) c.push_back(a.coeffs[i] + b.coeffs[i]);
  return CoordNForm(a.n, std::move(c));
}

CoordNForm scaleForm(double s, const CoordNForm& w) {
  std::vector<ScalarField> c;
  for (const auto& f : w.coeffs) c.push_back(s * f);
  return CoordNForm(w.n, std::move(c));
}

CoordNForm negForm(const CoordNForm& w) {
  std::vector<ScalarField> c;
  for (const auto& f : w.coeffs) c.push_back(-f);
  return CoordNForm(w.n, std::move(c));
}

CoordNForm mulField(const ScalarField& f, const CoordNForm& w) {
  if (f.dim() != w.ambient())
    throw DimensionError("scalar field dimension differs from form ambient");
  std::vector<ScalarField> c;
  for (const auto& g : w.coeffs) c.push_back(f * g);
  return CoordNForm(w.n, std::move(c));
}

double leibnizResidual(const ScalarField& f, const CoordNForm& w,
                       const Point& x) {
  const double lhs = evalField(extDerivCoord(mulField(f, w)), x);
  const std::vector<double> df = gradient(f, x);
  double rhs = evalField(f, x) * evalField(extDerivCoord(w), x);
  for (int i = 0; i <= w.n; ++i) {
    const double term = df[i] * evalField(w.coeffs[i], x);
    rhs += (i % 2 == 0) ? term : -term;
  }
  return std::abs(lhs - rhs);
}

CoordNForm precompose(const Matrix& a, const CoordNForm& w) {
  if (a.rows() != w.ambient() || a.cols() != w.ambient())
    throw DimensionError("precompose: matrix must be " +
                         std::to_string(w.ambient()) + "x" +
                         std::to_string(w.ambient()));
  const SmoothMap linear = SmoothMap::affine(a, Point(w.ambient(), 0.0));
  std::vector<ScalarField> c;
  for (const auto& f : w.coeffs) c.push_back(compose(f, linear));
  return CoordNForm(w.n, std::move(c));
}

}  // namespace stokes
