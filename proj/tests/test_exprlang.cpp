#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "stokes/exprlang.hpp"
#include "stokes/smoothfn.hpp"
#include "support/symbolic.hpp"

using namespace stokes;

TEST_CASE("parse and evaluate") {
  CHECK(evalField(parse("x0^2 + sin(x1)", 2), {2.0, 0.0}) == 4.0);
  CHECK(evalField(parse("1+2*3", 0), {}) == 7.0);
  CHECK(evalField(parse("2*3^2", 0), {}) == 18.0);
  CHECK(evalField(parse("(2*3)^2", 0), {}) == 36.0);
  CHECK(evalField(parse("8/4/2", 0), {}) == 1.0);
  CHECK(evalField(parse("5 - 3 - 1", 0), {}) == 1.0);
  CHECK(evalField(parse("-x0 - x1", 2), {1.0, 2.0}) == -3.0);
  CHECK(evalField(parse("2 - -3", 0), {}) == 5.0);
  CHECK(evalField(parse("-x0^2", 1), {3.0}) == -9.0);
  CHECK(evalField(parse("1.5e2 + .5", 0), {}) == 150.5);
  CHECK(evalField(parse("  sqrt( 16 )*exp(0)  ", 0), {}) == 4.0);
  CHECK(evalField(parse("pi", 0), {}) == std::numbers::pi);
  CHECK(evalField(parse("x0^0", 1), {0.0}) == 1.0);
}

TEST_CASE("annulus component parses to the expected map") {
  const ScalarField f = parse("(1+x0)*cos(2*pi*x1)", 2);
  for (double r : {0.0, 0.3, 1.0})
    for (double t : {0.0, 0.2, 0.75})
      CHECK(evalField(f, {r, t}) ==
            doctest::Approx((1 + r) * std::cos(2 * std::numbers::pi * t)).epsilon(1e-15));
}

TEST_CASE("parse errors carry a position") {
  auto position = [](const char* text, int dim) -> long {
    try {
      parseAst(text, dim);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position("x2", 2) == 0);
  CHECK(position("1 + x5", 3) == 4);
  CHECK(position("1 +", 1) == 3);
  CHECK(position("(x0", 1) == 3);
  CHECK(position("foo(x0)", 1) == 0);
  CHECK(position("x0^1.5", 1) == 4);
  CHECK(position("x0^-1", 1) == 3);
  CHECK(position("x0 x1", 2) == 3);
  CHECK(position("", 1) == 0);
  CHECK(position("x", 1) == 0);
  CHECK(position("sin x0", 1) == 4);
  CHECK_THROWS_AS(parse("x2", 2), ParseError);
}

TEST_CASE("formatExpr") {
  CHECK(formatExpr(ExprAst::constant(3.0)) == "3");
  CHECK(formatExpr(ExprAst::power(ExprAst::variable(0), 2)) == "x0^2");
  CHECK(formatExpr(parseAst("sin(x1)", 2)) == "sin(x1)");
  CHECK(formatExpr(parseAst("x0 - (x1 - x2)", 3)) == "x0-(x1-x2)");
  CHECK(formatExpr(parseAst("(x0 - x1) - x2", 3)) == "x0-x1-x2");
  CHECK(formatExpr(parseAst("(x0*x1)^3", 2)) == "(x0*x1)^3");
  CHECK(formatExpr(parseAst("-2.5*x0", 1)) == "(-2.5)*x0");
  const ExprAst sq = ExprAst::power(ExprAst::variable(0), 2);
  CHECK(parseAst(formatExpr(sq), 1) == sq);
}

TEST_CASE("parse of format is the identity on random trees") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 3000; ++trial) {
    const ExprAst ast = oracle::randomAst(rng, 4, 1 + trial % 6);
    const std::string text = formatExpr(ast);
    INFO(text);
    CHECK(parseAst(text, 4) == ast);
  }
}

TEST_CASE("dual evaluation matches symbolic differentiation") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 2.0);
  int compared = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int dim = 1 + trial % 3;
    const ExprAst ast = oracle::randomSmoothAst(rng, dim, 1 + trial % 5);
    const ScalarField f = toField(ast, dim);
    for (int p = 0; p < 5; ++p) {
      Point x;
      for (int j = 0; j < dim; ++j) x.push_back(u(rng));
      const double value = oracle::evalAt(ast, x);
      if (!std::isfinite(value) || std::abs(value) > 1e6) continue;
      const auto g = gradient(f, x);
      for (int k = 0; k < dim; ++k) {
        const double expected = oracle::evalAt(oracle::diff(ast, static_cast<unsigned>(k)), x);
        INFO(formatExpr(ast));
        CHECK(std::abs(g[k] - expected) <= 1e-10 * (1.0 + std::abs(expected)));
        ++compared;
      }
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("toField rejects indices beyond the dimension") {
  CHECK_THROWS_AS(toField(ExprAst::variable(3), 2), IndexError);
  CHECK(maxVariable(parseAst("x0 + x3*x1", 4)) == 3);
  CHECK(maxVariable(parseAst("7", 0)) == -1);
}
