#include <doctest.h>

#include <cmath>
#include <random>

#include "stokes/catalog.hpp"
#include "stokes/chains.hpp"
#include "stokes/exprlang.hpp"

using namespace stokes;

namespace {

CubeRegistry registry() {
  CubeRegistry reg;
  for (int d = 2; d <= 6; ++d) {
    reg.add("id" + std::to_string(d), catalog::identityCube(d).cube);
    std::vector<std::string> bent;
    for (int k = 0; k < d; ++k)
      bent.push_back("x" + std::to_string(k) + " + 0.1*x" + std::to_string((k + 1) % d) + "^2");
    reg.add("bent" + std::to_string(d), {SmoothMap(d, parseAll(bent, d))});
  }
  reg.add("annulus", catalog::annulus().cube);
  reg.add("poly", catalog::polynomialCube3to4().cube);
  reg.add("one", catalog::identityCube(1).cube);
  return reg;
}

CubeTerm base(const std::string& id) { return CubeTerm{id, {}}; }

int dimOf(const CubeRegistry& reg, const std::string& id) { return reg.at(id).dim(); }

// Boundary coefficients with the (-1)^i factor dropped.
int mutantSign(int, int eps) { return eps == 1 ? 1 : -1; }

}  // namespace

TEST_CASE("faceTerm freezes the i-th free coordinate") {
  const CubeTerm t0 = base("id3");
  const CubeTerm t1 = faceTerm(t0, 1, 0, 3);
  CHECK(t1.frozen == std::map<int, int>{{1, 0}});
  const CubeTerm t2 = faceTerm(t1, 1, 1, 3);
  CHECK(t2.frozen == std::map<int, int>{{1, 0}, {2, 1}});
  CHECK_THROWS_AS(faceTerm(t2, 1, 0, 3), IndexError);
  CHECK_THROWS_AS(faceTerm(t0, 0, 2, 3), IndexError);
  CHECK(effectiveDim(t2, registry()) == 1);
}

TEST_CASE("termToMap agrees with composed faces") {
  const CubeRegistry reg = registry();
  std::mt19937_64 rng(61);
  for (const std::string id : {"bent3", "poly", "annulus", "bent4"}) {
    const int d = dimOf(reg, id);
    const SingularCube sigma = reg.at(id);
    for (int i = 0; i < d; ++i)
      for (int eps = 0; eps <= 1; ++eps)
        for (int j = 0; j < d - 1; ++j)
          for (int eta = 0; eta <= 1; ++eta) {
            const CubeTerm t = faceTerm(faceTerm(base(id), i, eps, d), j, eta, d);
            const SmoothMap viaTerm = termToMap(t, reg);
            const SingularCube viaFaces = singularFace(singularFace(sigma, i, eps), j, eta);
            const SmoothMap viaIncl =
                compose(sigma.map, compose(faceInclusion(i, eps, d - 1), faceInclusion(j, eta, d - 2)));
            for (int p = 0; p < 100; ++p) {
              const Point x = catalog::randomPoint(rng, d - 2, 0.0, 1.0);
              const Point a = viaTerm(x);
              const Point b = viaFaces.map(x);
              const Point c = viaIncl(x);
              for (std::size_t r = 0; r < a.size(); ++r) {
                CHECK(std::abs(a[r] - b[r]) <= 1e-14);
                CHECK(std::abs(a[r] - c[r]) <= 1e-14);
              }
            }
          }
  }
}

TEST_CASE("boundary of a 1-cube") {
  const CubeRegistry reg = registry();
  const SingularChain b = boundary(SingularChain::single(base("one"), 1), reg);
  CHECK(b.dim() == 0);
  CHECK(b.size() == 2);
  CHECK(b.coeff(CubeTerm{"one", {{0, 1}}}) == 1);
  CHECK(b.coeff(CubeTerm{"one", {{0, 0}}}) == -1);
}

TEST_CASE("boundary of boundary vanishes") {
  const CubeRegistry reg = registry();
  for (const auto& id : reg.ids()) {
    if (dimOf(reg, id) < 2) continue;
    INFO(id);
    CHECK(boundaryBoundaryIsZero(base(id), reg));
    // Faces of registered cubes too.
    const CubeTerm f = faceTerm(base(id), 0, 1, dimOf(reg, id));
    if (effectiveDim(f, reg) >= 2) CHECK(boundaryBoundaryIsZero(f, reg));
  }

  // The sign convention is what makes it work.
  CHECK_FALSE(boundaryBoundaryIsZero(base("id3"), reg, mutantSign));
  double worst = 0.0;
  for (const auto& w : catalog::altForms(3, 1, 4))
    worst = std::max(worst, doubleBoundaryIntegralZero(base("bent3"), w.form, reg, kDefaultOrder, mutantSign));
  CHECK(worst > 1e-3);
  for (const auto& w : catalog::altForms(3, 1, 4))
    CHECK(doubleBoundaryIntegralZero(base("bent3"), w.form, reg) == 0.0);

  std::mt19937_64 rng(62);
  std::uniform_int_distribution<long> coeff(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + trial % 4;
    SingularChain c(d);
    c.add(base("id" + std::to_string(d)), coeff(rng));
    c.add(base("bent" + std::to_string(d)), coeff(rng));
    const int up = d + 1;
    c.add(faceTerm(base("bent" + std::to_string(up)), trial % up, trial % 2, up), coeff(rng));
    CHECK(boundary(boundary(c, reg), reg).empty());
  }
}

TEST_CASE("boundary is Z-linear") {
  const CubeRegistry reg = registry();
  const SingularChain a = SingularChain::single(base("id3"), 3, 2);
  const SingularChain b = SingularChain::single(base("bent3"), 3, -1);
  CHECK((boundary(a + b, reg) == boundary(a, reg) + boundary(b, reg)));
  CHECK((boundary(-3 * a, reg) == -3 * boundary(a, reg)));
  CHECK(boundary(SingularChain(3), reg).empty());
  CHECK((a + (-1) * a).empty());
}

TEST_CASE("normal form does not depend on face order") {
  // Freezing the same two coordinates along either route gives one term.
  for (int d = 2; d <= 5; ++d)
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b)
        for (int ea = 0; ea <= 1; ++ea)
          for (int eb = 0; eb <= 1; ++eb) {
            const CubeTerm t = base("id" + std::to_string(d));
            const CubeTerm first = faceTerm(faceTerm(t, a, ea, d), b - 1, eb, d);
            const CubeTerm second = faceTerm(faceTerm(t, b, eb, d), a, ea, d);
            CHECK((first == second));
            CHECK(first.frozen == std::map<int, int>{{a, ea}, {b, eb}});
          }
}

TEST_CASE("integrateChain") {
  const CubeRegistry reg = registry();
  const auto w = catalog::altForms(3, 3, 1).front();
  CHECK(integrateChain(SingularChain(3), w.form, reg) == 0.0);

  for (const std::string id : {"annulus", "poly"}) {
    const SingularCube sigma = reg.at(id);
    const int d = sigma.dim();
    const auto forms = id == "annulus" ? catalog::gentleAltForms(2, 1, 2) : catalog::altForms(4, 2, 2);
    for (const auto& v : forms) {
      const double chain = integrateChain(boundary(SingularChain::single(base(id), d), reg), v.form, reg);
      const SingularStokesSides s = singularStokes(sigma, v.form);
      CHECK(std::abs(chain - s.boundary) <= 1e-9 * (1.0 + std::abs(chain)));
    }
  }

  const SingularChain a = SingularChain::single(base("bent3"), 3);
  const double one = integrateChain(a, w.form, reg);
  CHECK(std::abs(integrateChain(-3 * a, w.form, reg) + 3 * one) <= 1e-12 * (1.0 + std::abs(one)));
  const SingularChain b = SingularChain::single(base("id3"), 3);
  const double two = integrateChain(b, w.form, reg);
  CHECK(std::abs(integrateChain(a + b, w.form, reg) - (one + two)) <= 1e-12 * (1.0 + std::abs(one + two)));
}

TEST_CASE("box chains") {
  for (int n = 0; n <= 3; ++n) {
    const int d = n + 1;
    for (const auto& entry : catalog::coordForms(n, 4)) {
      INFO(entry.name);
      BoxChain single;
      single.add(BoxDomain::unit(d), 1);
      CHECK(stokesChainResidual(single, entry.form) == boxStokesResidual(entry.form, BoxDomain::unit(d)));

      for (int i = 0; i < d; ++i) {
        const auto [b1, b2] = splitBox(BoxDomain::unit(d), i, 0.5);
        BoxChain two;
        two.add(b1, 1);
        two.add(b2, 1);
        CHECK(stokesChainResidual(two, entry.form) <= 1e-9);
        const ChainStokesSides whole = chainStokes(single, entry.form);
        const ChainStokesSides halves = chainStokes(two, entry.form);
        CHECK(std::abs(whole.interior - halves.interior) <= 1e-9 * (1.0 + std::abs(whole.interior)));
        CHECK(sharedFaceResidual(b1, b2, i, entry.form) <= 1e-12);
        CHECK(mergedBoundaryResidual(b1, b2, i, entry.form) <= 1e-9);
        CHECK(adjacent(b1, b2, i));
        CHECK_FALSE(adjacent(b2, b1, i));
        CHECK_THROWS_AS(sharedFaceResidual(b2, b1, i, entry.form), PreconditionError);
      }

      BoxChain scaled;
      scaled.add(BoxDomain::unit(d), -3);
      const ChainStokesSides s = chainStokes(scaled, entry.form);
      const ChainStokesSides u = chainStokes(single, entry.form);
      CHECK(std::abs(s.interior + 3 * u.interior) <= 1e-12 * (1.0 + std::abs(s.interior)));
      CHECK(s.residual() <= 1e-9);
    }
  }

  // A box and its negative cancel; a flat box has nothing on either side.
  const CoordNForm w = catalog::coordForms(1, 2)[1].form;
  BoxChain cancel;
  cancel.add(BoxDomain::unit(2), 1);
  cancel.add(BoxDomain::unit(2), -1);
  CHECK(cancel.empty());
  BoxChain flat;
  flat.add(BoxDomain({0.0, 0.5}, {1.0, 0.5}), 1);
  const ChainStokesSides f = chainStokes(flat, w);
  CHECK(f.interior == 0.0);
  CHECK(f.boundary == 0.0);

  CHECK_THROWS_AS(sharedFaceResidual(BoxDomain::unit(2), BoxDomain({2.0, 0.0}, {3.0, 1.0}), 0, w),
                  PreconditionError);
  CHECK_THROWS_AS(mergedBoundaryResidual(BoxDomain::unit(2), BoxDomain({1.0, 0.0}, {2.0, 2.0}), 0, w),
                  PreconditionError);
  BoxChain mixed;
  mixed.add(BoxDomain::unit(2), 1);
  CHECK_THROWS_AS(mixed.add(BoxDomain::unit(3), 1), DimensionError);
}
