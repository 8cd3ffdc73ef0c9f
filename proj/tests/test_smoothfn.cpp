#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "stokes/catalog.hpp"
#include "stokes/exprlang.hpp"
#include "stokes/smoothfn.hpp"

using namespace stokes;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

SmoothMap annulusMap() { return catalog::annulus().cube.map; }

double det2(const Matrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

}  // namespace

TEST_CASE("evalField on simple fields") {
  CHECK(evalField(parse("x0^2", 1), {3.0}) == 9.0);
  CHECK(evalField(ScalarField::constant(2, 5.0), {-1.0, 7.5}) == 5.0);
  CHECK(evalField(parse("(1+x0)*cos(2*pi*x1)", 2), {0.0, 0.0}) == 1.0);
  CHECK_THROWS_AS(evalField(parse("x0", 2), {1.0}), DimensionError);
  CHECK_THROWS_AS(gradient(parse("log(x0)", 1), {-1.0}), EvaluationError);
}

TEST_CASE("gradient") {
  const auto g = gradient(parse("x0^2", 1), {3.0});
  REQUIRE(g.size() == 1);
  CHECK(g[0] == 6.0);
  for (double v : gradient(ScalarField::constant(3, 4.0), {1.0, 2.0, 3.0})) CHECK(v == 0.0);
  const auto h = gradient(parse("x0*x1", 2), {2.0, 5.0});
  CHECK(h[0] == 5.0);
  CHECK(h[1] == 2.0);
}

TEST_CASE("gradient seeds in chunks beyond the dual width") {
  // Nine variables exceed one chunk of directions.
  const ScalarField f = parse("x0*x1 + x2^2 + x3*x4*x5 + sin(x6) + x7*x8^3", 9);
  const Point x = {1, 2, 3, 4, 5, 6, 0.5, 2, 3};
  const auto g = gradient(f, x);
  const std::vector<double> expected = {2, 1, 6, 30, 24, 20, std::cos(0.5), 27, 54};
  for (int k = 0; k < 9; ++k) CHECK(g[k] == doctest::Approx(expected[k]).epsilon(1e-15));
}

TEST_CASE("jacobian of identity, annulus and constant maps") {
  const Matrix id = jacobian(SmoothMap::identity(3), {0.3, -1.0, 2.0});
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(id(r, c) == (r == c ? 1.0 : 0.0));

  for (double r : {0.0, 0.25, 0.5, 1.0})
    for (double t : {0.0, 0.1, 0.25, 0.8}) {
      const double d = det2(jacobian(annulusMap(), {r, t}));
      CHECK(d == doctest::Approx(kTwoPi * (1.0 + r)).epsilon(1e-14));
    }
  CHECK(det2(jacobian(annulusMap(), {0.0, 0.0})) == doctest::Approx(kTwoPi).epsilon(1e-15));

  const Matrix z = jacobian(SmoothMap::constant(2, {1.0, 2.0, 3.0}), {0.5, 0.5});
  CHECK(z.rows() == 3);
  CHECK(z.cols() == 2);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 2; ++c) CHECK(z(r, c) == 0.0);
}

TEST_CASE("fdJacobian agrees with the dual-number Jacobian") {
  const Matrix fdId = fdJacobian(SmoothMap::identity(2), {0.2, 0.7});
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) CHECK(fdId(r, c) == doctest::Approx(r == c ? 1.0 : 0.0).epsilon(1e-10));

  const Point x = {0.5, 0.25};
  const Matrix ad = jacobian(annulusMap(), x);
  const Matrix fd = fdJacobian(annulusMap(), x, 1e-5);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      CHECK(std::abs(ad(r, c) - fd(r, c)) <= 1e-6 * (1.0 + std::abs(ad(r, c))));

  Matrix a(2, 3);
  a(0, 0) = 1.5; a(0, 1) = -2.0; a(0, 2) = 0.25;
  a(1, 0) = 3.0; a(1, 1) = 0.5;  a(1, 2) = -1.0;
  const SmoothMap aff = SmoothMap::affine(a, {1.0, -1.0});
  const Matrix ja = jacobian(aff, {0.1, 0.2, 0.3});
  const Matrix jf = fdJacobian(aff, {0.1, 0.2, 0.3});
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c) {
      CHECK(ja(r, c) == a(r, c));
      CHECK(jf(r, c) == doctest::Approx(a(r, c)).epsilon(1e-9));
    }
}

TEST_CASE("gradient matches central differences across the catalog") {
  std::mt19937_64 rng(7);
  for (int dim = 1; dim <= 4; ++dim)
    for (int e = 0; e < 12; ++e) {
      const ScalarField f = parse(catalog::smoothExpr(dim, e, 1), dim);
      const SmoothMap single(dim, {f});
      for (int p = 0; p < 100; ++p) {
        const Point x = catalog::randomPoint(rng, dim, -1.0, 2.0);
        const auto g = gradient(f, x);
        const Matrix fd = fdJacobian(single, x);
        double gmax = 0.0;
        double diff = 0.0;
        for (int c = 0; c < dim; ++c) {
          gmax = std::max(gmax, std::abs(g[c]));
          diff = std::max(diff, std::abs(g[c] - fd(0, c)));
        }
        CHECK(diff <= 1e-6 * (1.0 + gmax));
      }
    }
}

TEST_CASE("unseeded duals reproduce real arithmetic bit for bit") {
  std::mt19937_64 rng(11);
  for (int dim = 1; dim <= 3; ++dim)
    for (int e = 0; e < 12; ++e) {
      const ScalarField f = parse(catalog::smoothExpr(dim, e, 2), dim);
      for (int p = 0; p < 20; ++p) {
        const Point x = catalog::randomPoint(rng, dim, -1.0, 2.0);
        std::vector<Dual1> d1(x.begin(), x.end());
        std::vector<Dual2> d2;
        for (double v : x) d2.emplace_back(Dual1(v), 0);
        const double real = f(x);
        CHECK(f.eval<Dual1>(d1).v == real);
        CHECK(f.eval<Dual2>(d2).v.v == real);
      }
    }
}

TEST_CASE("chain rule for compositions") {
  const SmoothMap tau(2, parseAll({"x0 + x1^2", "x0*x1 - 1", "x0^3"}, 2));
  const SmoothMap sigma(3, parseAll({"x0*x2 + x1", "x1^2 - x0*x1*x2"}, 3));
  const SmoothMap comp = compose(sigma, tau);
  std::mt19937_64 rng(3);
  for (int p = 0; p < 50; ++p) {
    const Point x = catalog::randomPoint(rng, 2, -1.0, 2.0);
    const Matrix lhs = jacobian(comp, x);
    const Matrix rhs = jacobian(sigma, tau(x)) * jacobian(tau, x);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) CHECK(std::abs(lhs(r, c) - rhs(r, c)) <= 1e-10);
  }
}

TEST_CASE("field algebra and partial fields") {
  const ScalarField a = parse("x0*x1", 2);
  const ScalarField b = parse("sin(x1)", 2);
  const Point x = {0.7, -0.3};
  CHECK((a + b)(x) == doctest::Approx(a(x) + b(x)));
  CHECK((a - b)(x) == doctest::Approx(a(x) - b(x)));
  CHECK((a * b)(x) == doctest::Approx(a(x) * b(x)));
  CHECK((-a)(x) == doctest::Approx(-a(x)));
  CHECK((2.5 * b)(x) == doctest::Approx(2.5 * b(x)));
  CHECK(partialField(a, 0)(x) == doctest::Approx(-0.3));
  CHECK(partialField(partialField(a, 0), 1)(x) == doctest::Approx(1.0));
  CHECK(compose(a, SmoothMap::identity(2))(x) == a(x));
}

TEST_CASE("derivative requests past two nesting levels are rejected") {
  const ScalarField f = partialField(partialField(parse("x0^3", 1), 0), 0);
  CHECK(f(Point{2.0}) == doctest::Approx(12.0));
  CHECK_THROWS_AS(gradient(f, {2.0}), EvaluationError);
}
