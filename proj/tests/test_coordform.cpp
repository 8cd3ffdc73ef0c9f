#include <doctest.h>

#include <cmath>
#include <random>

#include "stokes/alternating.hpp"
#include "stokes/catalog.hpp"
#include "stokes/coordform.hpp"
#include "stokes/exprlang.hpp"
#include "support/symbolic.hpp"

using namespace stokes;

namespace {

CoordNForm constantCoord(int n, double base) {
  std::vector<ScalarField> c;
  for (int i = 0; i <= n; ++i) c.push_back(ScalarField::constant(n + 1, base - i));
  return CoordNForm(n, c);
}

/// Symbolic sum_i (-1)^i d/dx_i of the coefficient trees.
double symbolicExtDeriv(const std::vector<ExprAst>& coeffs, const Point& x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const double t = oracle::evalAt(oracle::diff(coeffs[i], static_cast<unsigned>(i)), x);
    acc += i % 2 == 0 ? t : -t;
  }
  return acc;
}

Matrix randomMatrix(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  Matrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = u(rng);
  return m;
}

}  // namespace

TEST_CASE("signed coefficients alternate") {
  const CoordNForm w(2, parseAll({"x0 + 1", "x1*x2", "sin(x2)"}, 3));
  const Point x = {0.3, 0.5, 0.7};
  CHECK(signedCoeff(w, 0)(x) == w.coeff(0)(x));
  CHECK(signedCoeff(w, 1)(x) == -w.coeff(1)(x));
  CHECK(signedCoeff(w, 2)(x) == w.coeff(2)(x));
  CHECK_THROWS_AS(signedCoeff(w, 3), IndexError);
}

TEST_CASE("construction validates shapes") {
  CHECK_THROWS_AS(CoordNForm(1, parseAll({"x0"}, 2)), DimensionError);
  CHECK_THROWS_AS(CoordNForm(1, parseAll({"x0", "x1"}, 3)), DimensionError);
  CHECK_THROWS_AS(addForms(zeroForm(1), zeroForm(2)), DimensionError);
}

TEST_CASE("extDerivCoord examples") {
  for (int n = 0; n <= 3; ++n) {
    const ScalarField d = extDerivCoord(constantCoord(n, 2.5));
    CHECK(d(Point(static_cast<std::size_t>(n + 1), 0.4)) == 0.0);
  }
  const ScalarField f = parse("sin(x0)*x0", 1);
  const ScalarField d0 = extDerivCoord(CoordNForm(0, {f}));
  for (double y : {-1.0, 0.0, 0.7, 2.0})
    CHECK(d0(Point{y}) == doctest::Approx(std::cos(y) * y + std::sin(y)).epsilon(1e-15));

  const ScalarField q = parse("x0^2*x1", 2);
  const ScalarField p = parse("exp(x1) - x0", 2);
  const ScalarField d1 = extDerivCoord(CoordNForm(1, {q, p}));
  for (const Point& x : {Point{0.5, 0.5}, Point{-1.0, 2.0}})
    CHECK(d1(x) == doctest::Approx(2 * x[0] * x[1] - std::exp(x[1])).epsilon(1e-15));
}

TEST_CASE("algebra of coordinate forms") {
  std::mt19937_64 rng(21);
  for (int n = 0; n <= 3; ++n) {
    const auto forms = catalog::coordForms(n, 4);
    const CoordNForm& w = forms[1].form;
    const CoordNForm& v = forms[2].form;
    const ScalarField dz = extDerivCoord(zeroForm(n));
    const ScalarField dw = extDerivCoord(w);
    const ScalarField dv = extDerivCoord(v);
    const ScalarField dsame = extDerivCoord(scaleForm(1.0, w));
    const ScalarField dcancel = extDerivCoord(addForms(w, negForm(w)));
    const double a = 1.25;
    const double b = -2.0;
    const ScalarField dmix = extDerivCoord(addForms(scaleForm(a, w), scaleForm(b, v)));
    for (int p = 0; p < 100; ++p) {
      const Point x = catalog::randomPoint(rng, n + 1, -1.0, 2.0);
      CHECK(dz(x) == 0.0);
      CHECK(dsame(x) == dw(x));
      CHECK(std::abs(dcancel(x)) <= 1e-12);
      CHECK(std::abs(dmix(x) - (a * dw(x) + b * dv(x))) <= 1e-12 * (1.0 + std::abs(dmix(x))));
    }
  }
}

TEST_CASE("extDerivCoord matches symbolic differentiation") {
  std::mt19937_64 rng(22);
  for (int n = 0; n <= 3; ++n) {
    for (int e = 0; e < 6; ++e) {
      std::vector<ExprAst> asts;
      for (int i = 0; i <= n; ++i) asts.push_back(parseAst(catalog::smoothExpr(n + 1, e, i), n + 1));
      std::vector<ScalarField> fields;
      for (const auto& a : asts) fields.push_back(toField(a, n + 1));
      const ScalarField d = extDerivCoord(CoordNForm(n, fields));
      for (int p = 0; p < 20; ++p) {
        const Point x = catalog::randomPoint(rng, n + 1, -1.0, 2.0);
        const double expected = symbolicExtDeriv(asts, x);
        CHECK(std::abs(d(x) - expected) <= 1e-10 * (1.0 + std::abs(expected)));
      }
    }
  }
}

TEST_CASE("Leibniz rule") {
  std::mt19937_64 rng(23);
  const ScalarField c = ScalarField::constant(3, 4.0);
  for (int p = 0; p < 20; ++p)
    CHECK(leibnizResidual(c, catalog::coordForms(2, 2)[1].form,
                          catalog::randomPoint(rng, 3, -1.0, 2.0)) <= 1e-12);

  // f = x0 times a constant 1-form: by hand d(f w) = w_0.
  const CoordNForm k(1, {ScalarField::constant(2, 1.5), ScalarField::constant(2, -0.5)});
  const std::vector<ExprAst> product = {parseAst("x0*1.5", 2), parseAst("x0*(-0.5)", 2)};
  for (int p = 0; p < 20; ++p) {
    const Point x = catalog::randomPoint(rng, 2, -1.0, 2.0);
    CHECK(leibnizResidual(parse("x0", 2), k, x) <= 1e-12);
    CHECK(evalField(extDerivCoord(mulField(parse("x0", 2), k)), x) == symbolicExtDeriv(product, x));
    CHECK(symbolicExtDeriv(product, x) == 1.5);
  }

  for (int n = 0; n <= 3; ++n)
    for (int e = 0; e < 5; ++e) {
      const ScalarField f = parse(catalog::polynomialExpr(n + 1, e + 40, 0, 3), n + 1);
      const CoordNForm v = catalog::polynomialCoordForms(n, 5, 3)[static_cast<std::size_t>(e)].form;
      for (int p = 0; p < 100; ++p)
        CHECK(leibnizResidual(f, v, catalog::randomPoint(rng, n + 1, -1.0, 1.5)) <= 1e-10);
    }
}

TEST_CASE("precompose is contravariantly functorial and linear") {
  std::mt19937_64 rng(24);
  for (int n = 0; n <= 3; ++n) {
    const int m = n + 1;
    const auto forms = catalog::coordForms(n, 3);
    const CoordNForm& w = forms[1].form;
    const CoordNForm& v = forms[2].form;
    const Matrix a = randomMatrix(rng, m);
    const Matrix b = randomMatrix(rng, m);
    const CoordNForm id = precompose(Matrix::identity(m), w);
    const CoordNForm nested = precompose(a, precompose(b, w));
    const CoordNForm direct = precompose(b * a, w);
    const CoordNForm sumFirst = precompose(a, addForms(w, v));
    const CoordNForm sumAfter = addForms(precompose(a, w), precompose(a, v));
    for (int p = 0; p < 20; ++p) {
      const Point x = catalog::randomPoint(rng, m, -1.0, 1.0);
      for (int i = 0; i <= n; ++i) {
        CHECK(id.coeff(i)(x) == w.coeff(i)(x));
        const double l = nested.coeff(i)(x);
        CHECK(std::abs(l - direct.coeff(i)(x)) <= 1e-12 * (1.0 + std::abs(l)));
        const double s = sumFirst.coeff(i)(x);
        CHECK(std::abs(s - sumAfter.coeff(i)(x)) <= 1e-12 * (1.0 + std::abs(s)));
      }
    }
  }
  CHECK_THROWS_AS(precompose(Matrix::identity(3), zeroForm(0)), DimensionError);
}

TEST_CASE("round trip through alternating forms") {
  std::mt19937_64 rng(25);
  for (int n = 0; n <= 3; ++n)
    for (const auto& entry : catalog::coordForms(n, 3)) {
      const CoordNForm back = toCoordNForm(fromCoordNForm(entry.form));
      for (int p = 0; p < 10; ++p) {
        const Point x = catalog::randomPoint(rng, n + 1, -1.0, 2.0);
        for (int i = 0; i <= n; ++i) CHECK(back.coeff(i)(x) == entry.form.coeff(i)(x));
      }
    }
}
