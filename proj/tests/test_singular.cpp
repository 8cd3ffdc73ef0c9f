#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "stokes/catalog.hpp"
#include "stokes/exprlang.hpp"
#include "stokes/finindex.hpp"
#include "stokes/singular.hpp"

using namespace stokes;

namespace {

constexpr double kPi = std::numbers::pi;

/// w(sigma(y)) applied to the columns `cols` of a finite-difference Jacobian.
double fdPulledValue(const SingularCube& sigma, const AltFormField& w, const Point& y,
                     const std::vector<int>& cols) {
  const Matrix j = fdJacobian(sigma.map, y, 1e-5);
  std::vector<Point> v;
  for (int c : cols) {
    Point col;
    for (int r = 0; r < j.rows(); ++r) col.push_back(j(r, c));
    v.push_back(col);
  }
  return evaluateAlt(w.at(sigma.map(y)), v);
}

std::vector<int> range(int n) {
  std::vector<int> r;
  for (int k = 0; k < n; ++k) r.push_back(k);
  return r;
}

}  // namespace

TEST_CASE("face inclusions") {
  CHECK(faceInclusion(0, 1.0, 1)({0.4}) == Point{1.0, 0.4});
  CHECK(faceInclusion(2, 0.0, 2)({0.4, 0.6}) == Point{0.4, 0.6, 0.0});
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i <= n; ++i) {
      const Matrix j = jacobian(faceInclusion(i, 1.0, n), Point(static_cast<std::size_t>(n), 0.3));
      for (int c = 0; c < n; ++c)
        for (int r = 0; r <= n; ++r) CHECK(j(r, c) == (r == succAbove(i, c) ? 1.0 : 0.0));
    }
  CHECK_THROWS_AS(faceInclusion(3, 0.0, 2), IndexError);
}

TEST_CASE("singular faces") {
  const SingularCube id{SmoothMap::identity(3)};
  for (int i = 0; i < 3; ++i)
    for (int eps = 0; eps <= 1; ++eps) {
      const SingularCube f = singularFace(id, i, eps);
      const Point t = {0.2, 0.9};
      CHECK(f.map(t) == faceInclusion(i, eps, 2)(t));
    }
  const SingularCube a = catalog::annulus().cube;
  const SingularCube edge = singularFace(a, 1, 0);
  for (double r : {0.0, 0.3, 1.0}) {
    const Point p = edge.map({r});
    CHECK(p[0] == doctest::Approx(1.0 + r).epsilon(1e-15));
    CHECK(p[1] == 0.0);
  }
  CHECK_THROWS_AS(singularFace(a, 2, 0), IndexError);
  CHECK_THROWS_AS(singularFace(a, 0, 2), IndexError);
}

TEST_CASE("pullback") {
  const auto w = catalog::altForms(3, 2, 1).front();
  const Point x = {0.2, -0.4, 0.9};
  const AltForm same = pullbackForm({SmoothMap::identity(3)}, w.form, x);
  const AltForm direct = w.form.at(x);
  for (std::size_t i = 0; i < same.coeffs.size(); ++i) CHECK(same.coeffs[i] == direct.coeffs[i]);

  const SingularCube a = catalog::annulus().cube;
  for (double r : {0.0, 0.5, 1.0})
    for (double t : {0.0, 0.37}) {
      const AltForm top = pullbackForm(a, catalog::areaForm().form, {r, t});
      CHECK(top.coeffs[0] == doctest::Approx(2 * kPi * (1 + r)).epsilon(1e-14));
      // By hand: sigma^*(1/2 (x dy - y dx)) = pi (1+r)^2 dtheta.
      const AltForm one = pullbackForm(a, catalog::annulusForm().form, {r, t});
      CHECK(std::abs(one.coeffs[0]) <= 1e-15);
      CHECK(one.coeffs[1] == doctest::Approx(kPi * (1 + r) * (1 + r)).epsilon(1e-14));
    }

  const SingularCube flat = catalog::constantCube(2, 3).cube;
  for (int k = 1; k <= 2; ++k) {
    const AltForm p = pullbackForm(flat, catalog::altForms(3, k, 1).front().form, {0.5, 0.5});
    for (double v : p.coeffs) CHECK(v == 0.0);
  }
}

TEST_CASE("integrateForm") {
  const auto top = catalog::altForms(3, 3, 2);
  for (const auto& w : top) {
    const double viaForm = integrateForm({SmoothMap::identity(3)}, w.form);
    const double viaBox = integrateBox(w.form.coeffFields[0], BoxDomain::unit(3));
    CHECK(std::abs(viaForm - viaBox) <= 1e-12 * (1.0 + std::abs(viaBox)));
  }
  const double area = integrateForm(catalog::annulus().cube, catalog::areaForm().form);
  CHECK(std::abs(area - 3 * kPi) <= 1e-8);
  const AltFormField zero(2, 2, {ScalarField::constant(2, 0.0)});
  CHECK(integrateForm(catalog::annulus().cube, zero) == 0.0);
  CHECK_THROWS_AS(integrateForm(catalog::identityCube(2).cube, AltFormField(2, 1, parseAll({"1", "1"}, 2))),
                  DimensionError);
  CHECK_THROWS_AS(integrateForm({SmoothMap::identity(7)}, AltFormField(7, 7, {ScalarField::constant(7, 1.0)})),
                  CostCapError);
}

TEST_CASE("face matching") {
  std::mt19937_64 rng(51);
  const auto idForms = catalog::altForms(3, 2, 2);
  for (const auto& w : idForms)
    for (int i = 0; i < 3; ++i)
      for (int eps = 0; eps <= 1; ++eps)
        CHECK(faceMatchingResidual(catalog::identityCube(3).cube, w.form, i, eps, {0.3, 0.8}) == 0.0);

  const SingularCube a = catalog::annulus().cube;
  for (const auto& w : catalog::altForms(2, 1, 3))
    for (int i = 0; i < 2; ++i)
      for (int eps = 0; eps <= 1; ++eps)
        for (int p = 0; p < 50; ++p)
          CHECK(faceMatchingResidual(a, w.form, i, eps, catalog::randomPoint(rng, 1, 0.0, 1.0)) <= 1e-10);

  const SingularCube poly = catalog::polynomialCube3to4().cube;
  for (const auto& w : catalog::altForms(4, 2, 2))
    for (int i = 0; i < 3; ++i)
      for (int eps = 0; eps <= 1; ++eps)
        for (int p = 0; p < 20; ++p) {
          const Point t = catalog::randomPoint(rng, 2, 0.0, 1.0);
          CHECK(faceMatchingResidual(poly, w.form, i, eps, t) <= 1e-9);
          // Oracle: both sides again, each through finite differences.
          const Point y = insertCoord(i, eps, t);
          const double lhs = fdPulledValue(poly, w.form, y, {succAbove(i, 0), succAbove(i, 1)});
          const double rhs = fdPulledValue(singularFace(poly, i, eps), w.form, t, range(2));
          CHECK(std::abs(lhs - rhs) <= 1e-6 * (1.0 + std::abs(lhs)));
          const AltForm ad = pullbackForm(singularFace(poly, i, eps), w.form, t);
          CHECK(std::abs(ad.coeffs[0] - rhs) <= 1e-6 * (1.0 + std::abs(rhs)));
        }
}

TEST_CASE("singular Stokes") {
  for (int d = 1; d <= 3; ++d) {
    const auto w = catalog::altForms(d, d - 1, 1).front();
    const SingularStokesSides s = singularStokes(catalog::identityCube(d).cube, w.form);
    const StokesSides b = boxStokes(toCoordNForm(w.form), BoxDomain::unit(d));
    CHECK(std::abs(s.interior - b.interior) <= 1e-12 * (1.0 + std::abs(b.interior)));
    CHECK(std::abs(s.boundary - b.boundary) <= 1e-12 * (1.0 + std::abs(b.boundary)));
  }

  const SingularStokesSides ann = singularStokes(catalog::annulus().cube, catalog::annulusForm().form);
  CHECK(std::abs(ann.interior - 3 * kPi) <= 1e-8);
  CHECK(std::abs(ann.boundary - 3 * kPi) <= 1e-8);
  CHECK(ann.residual() <= 1e-8);
  CHECK(std::abs(ann.faceTerms[3] - ann.faceTerms[2]) <= 1e-9);
  REQUIRE(ann.faceTerms.size() == 4);

  for (int d = 1; d <= 3; ++d) {
    const SingularStokesSides flat =
        singularStokes(catalog::constantCube(d, 3).cube, catalog::altForms(3, d - 1, 1).front().form);
    if (d > 1) {
      CHECK(flat.interior == 0.0);
      CHECK(flat.boundary == 0.0);
    } else {
      // A 0-form on a constant 1-cube: both ends see the same value.
      CHECK(flat.interior == 0.0);
      CHECK(std::abs(flat.boundary) == 0.0);
    }
  }

  for (int d = 1; d <= 3; ++d)
    for (const auto& cube : catalog::cubes(d)) {
      const int m = cube.cube.ambient();
      const auto forms = cube.name == "annulus" ? catalog::gentleAltForms(m, d - 1, 2)
                                                : catalog::altForms(m, d - 1, 2);
      for (const auto& w : forms) {
        INFO(cube.name << " " << w.name);
        CHECK(singularStokesResidual(cube.cube, w.form) <= 1e-7);
      }
    }
}

TEST_CASE("pullback commutes with d") {
  std::mt19937_64 rng(52);
  for (int d = 2; d <= 3; ++d)
    for (const auto& cube : catalog::cubes(d)) {
      const int m = cube.cube.ambient();
      for (int k = 0; k + 1 <= d; ++k)
        for (const auto& w : catalog::altForms(m, k, 2))
          for (int p = 0; p < 5; ++p) {
            INFO(cube.name << " " << w.name);
            CHECK(pullbackNaturalityResidual(cube.cube, w.form, catalog::randomPoint(rng, d, -0.5, 1.5)) <= 1e-7);
          }
    }
}
