#include "stokes/singular.hpp"

#include <cmath>
#include <string>

#include "stokes/finindex.hpp"

namespace stokes {

namespace {

void requireForm(const SingularCube& sigma, const AltFormField& w) {
  if (w.ambient != sigma.ambient())
    throw DimensionError("form lives on R^" + std::to_string(w.ambient) +
                         " but the cube maps into R^" +
                         std::to_string(sigma.ambient()));
}

void requireFace(const SingularCube& sigma, int i, int eps) {
  if (sigma.dim() < 1) throw DimensionError("a 0-cube has no faces");
  if (i < 0 || i >= sigma.dim())
    throw IndexError("face index " + std::to_string(i) +
                     " out of range for a " + std::to_string(sigma.dim()) +
                     "-cube");
  if (eps != 0 && eps != 1) throw IndexError("face value must be 0 or 1");
}

std::vector<Point> basisVectors(int dim, int count, int skip) {
  std::vector<Point> out;
  for (int j = 0; j < count; ++j) {
    Point e(static_cast<std::size_t>(dim), 0.0);
    e[skip < 0 ? j : succAbove(skip, j)] = 1.0;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

SmoothMap faceInclusion(int i, double eps, int n) {
  if (n < 0) throw DimensionError("face inclusion needs n >= 0");
  if (i < 0 || i > n)
    throw IndexError("face inclusion slot " + std::to_string(i) +
                     " out of range 0.." + std::to_string(n));
  std::vector<ScalarField> comps;
  for (int j = 0; j <= n; ++j) {
    if (j < i)
      comps.push_back(ScalarField::coordinate(n, j));
    else if (j == i)
      comps.push_back(ScalarField::constant(n, eps));
    else
      comps.push_back(ScalarField::coordinate(n, j - 1));
  }
  return SmoothMap(n, std::move(comps));
}

SingularCube singularFace(const SingularCube& sigma, int i, int eps) {
  requireFace(sigma, i, eps);
  return {compose(sigma.map, faceInclusion(i, eps, sigma.dim() - 1))};
}

AltForm pullbackForm(const SingularCube& sigma, const AltFormField& w,
                     const Point& x) {
  requireForm(sigma, w);
  if (w.degree > sigma.dim())
    throw DimensionError("cannot pull a " + std::to_string(w.degree) +
                         "-form back to a " + std::to_string(sigma.dim()) +
                         "-cube");
  return compLinear(w.at(sigma.map(x)), jacobian(sigma.map, x));
}

AltFormField pullbackField(const SingularCube& sigma, const AltFormField& w) {
  requireForm(sigma, w);
  const int d = sigma.dim();
  const int k = w.degree;
  if (k > d)
    throw DimensionError("cannot pull a " + std::to_string(k) +
                         "-form back to a " + std::to_string(d) + "-cube");
  const auto& targets = indexSets(d, k);
  std::vector<ScalarField> fields;
  for (std::size_t jset = 0; jset < targets.size(); ++jset) {
    fields.push_back(ScalarField::generic(d, [sigma, w, jset](auto x) {
      using S = typename decltype(x)::value_type;
      const std::vector<S> y = sigma.map.eval<S>(x);
      const std::vector<S> c = w.eval<S>(y);
      const MatrixOf<S> jac = jacobianOver<S>(sigma.map, x);
      return compLinearOver<S>(c, w.ambient, w.degree, jac)[jset];
    }));
  }
  return AltFormField(d, k, std::move(fields));
}

double integrateForm(const SingularCube& sigma, const AltFormField& w,
                     int order) {
  requireForm(sigma, w);
  const int d = sigma.dim();
  if (w.degree != d)
    throw DimensionError("integrating a " + std::to_string(w.degree) +
                         "-form over a " + std::to_string(d) + "-cube");
  if (d > kMaxBoxDim)
    throw CostCapError("cube dimension " + std::to_string(d) +
                       " exceeds the cap of " + std::to_string(kMaxBoxDim));
  const std::vector<IndexSet>& rowsets = indexSets(w.ambient, d);
  // Integrand: sum_I w_I(sigma x) det(D sigma(x)[I, :]).
  const ScalarField integrand =
      ScalarField::generic(d, [sigma, w, rowsets, d](auto x) {
        using S = typename decltype(x)::value_type;
        if (rowsets.empty()) return S(0.0);
        const std::vector<S> y = sigma.map.eval<S>(x);
        const MatrixOf<S> jac = jacobianOver<S>(sigma.map, x);
        S acc(0.0);
        MatrixOf<S> minor(d, d);
        for (std::size_t s = 0; s < rowsets.size(); ++s) {
          for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) minor(r, c) = jac(rowsets[s].indices[r], c);
          acc = acc + w.coeffFields[s].eval<S>(y) * determinant(minor);
        }
        return acc;
      });
  return integrateBox(integrand, BoxDomain::unit(d), order);
}

double faceMatchingResidual(const SingularCube& sigma, const AltFormField& w,
                            int i, int eps, const Point& x) {
  requireFace(sigma, i, eps);
  const int n = sigma.dim() - 1;
  if (w.degree != n)
    throw DimensionError("face matching needs a form of degree dim - 1");
  if (static_cast<int>(x.size()) != n)
    throw DimensionError("face point must have dimension " + std::to_string(n));
  const Point lifted = faceInclusion(i, eps, n)(x);
  const double viaCube = evaluateAlt(pullbackForm(sigma, w, lifted),
                                     basisVectors(n + 1, n, i));
  const double viaFace = evaluateAlt(
      pullbackForm(singularFace(sigma, i, eps), w, x), basisVectors(n, n, -1));
  return std::abs(viaCube - viaFace);
}

double SingularStokesSides::residual() const {
  return std::abs(interior - boundary);
}

SingularStokesSides singularStokes(const SingularCube& sigma,
                                   const AltFormField& w, int order) {
  requireForm(sigma, w);
  const int d = sigma.dim();
  if (d < 1) throw DimensionError("Stokes needs a cube of dimension >= 1");
  if (w.degree + 1 != d)
    throw DimensionError("Stokes needs a form of degree dim - 1");
  SingularStokesSides sides;
  sides.interior = integrateForm(sigma, extDerivLazy(w), order);
  sides.faceTerms.assign(static_cast<std::size_t>(2 * d), 0.0);
  for (int i = 0; i < d; ++i) {
    for (int eps = 0; eps <= 1; ++eps)
      sides.faceTerms[2 * i + eps] =
          integrateForm(singularFace(sigma, i, eps), w, order);
    const double diff = sides.faceTerms[2 * i + 1] - sides.faceTerms[2 * i];
    sides.boundary += (i % 2 == 0) ? diff : -diff;
  }
  return sides;
}

double singularStokesResidual(const SingularCube& sigma, const AltFormField& w,
                              int order) {
  return singularStokes(sigma, w, order).residual();
}

double pullbackNaturalityResidual(const SingularCube& sigma,
                                  const AltFormField& w, const Point& x) {
  requireForm(sigma, w);
  if (w.degree + 1 > sigma.dim())
    throw DimensionError("naturality needs degree + 1 <= cube dimension");
  const AltForm lhs = extDerivField(pullbackField(sigma, w), x);
  const AltForm rhs =
      compLinear(extDerivField(w, sigma.map(x)), jacobian(sigma.map, x));
  double worst = 0.0;
  for (std::size_t s = 0; s < lhs.coeffs.size(); ++s)
    worst = std::max(worst, std::abs(lhs.coeffs[s] - rhs.coeffs[s]));
  return worst;
}

}  // namespace stokes
