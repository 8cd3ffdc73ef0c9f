#include "stokes/catalog.hpp"

#include <array>
#include <sstream>

#include "stokes/exprlang.hpp"

namespace stokes::catalog {

namespace {

// Deterministic integer mixing so catalog entries vary across coefficients
// without an RNG whose sequence could drift between standard libraries.
std::uint32_t mix(std::uint32_t h) {
  h ^= h >> 16;
  h *= 0x7feb352dU;
  h ^= h >> 15;
  h *= 0x846ca68bU;
  h ^= h >> 16;
  return h;
}

std::uint32_t seedFor(int dim, int entry, int coeff) {
  return mix(static_cast<std::uint32_t>(dim) * 7919U +
             static_cast<std::uint32_t>(entry) * 104729U +
             static_cast<std::uint32_t>(coeff) * 1299709U + 17U);
}

std::string var(std::uint32_t h, int slot, int dim) {
  return "x" + std::to_string((h >> (4 * slot)) % static_cast<std::uint32_t>(dim));
}

std::string amp(std::uint32_t h, int slot) {
  static constexpr std::array<const char*, 6> kAmps = {"0.5", "1",   "1.5",
                                                       "2",   "0.75", "1.25"};
  return kAmps[(h >> (3 * slot + 7)) % kAmps.size()];
}

std::vector<std::string> coeffExprs(int dim, int count, int entry,
                                    bool polynomialOnly, int maxDegree) {
  std::vector<std::string> out;
  for (int c = 0; c < count; ++c)
    out.push_back(polynomialOnly ? polynomialExpr(dim, entry, c, maxDegree)
                                 : smoothExpr(dim, entry, c));
  return out;
}

std::string joinNames(const std::string& prefix, int entry) {
  return prefix + "#" + std::to_string(entry);
}

}  // namespace

std::string polynomialExpr(int dim, int entry, int coeff, int maxDegree) {
  std::uint32_t h = seedFor(dim, entry, coeff);
  std::ostringstream os;
  for (int term = 0; term < 3; ++term) {
    h = mix(h + static_cast<std::uint32_t>(term) * 31U);
    int c = static_cast<int>(h % 7U) - 3;
    if (c == 0) c = 1;
    if (term > 0) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    os << std::abs(c);
    const int factors = 1 + static_cast<int>((h >> 5) % 3U);
    std::vector<int> degree(static_cast<std::size_t>(dim), 0);
    for (int f = 0; f < factors; ++f) {
      const int v = static_cast<int>((h >> (8 + 4 * f)) % static_cast<std::uint32_t>(dim));
      const int e = 1 + static_cast<int>((h >> (20 + 3 * f)) % 3U);
      degree[v] = std::min(maxDegree, degree[v] + e);
    }
    for (int v = 0; v < dim; ++v) {
      if (degree[v] == 0) continue;
      os << "*x" << v;
      if (degree[v] > 1) os << "^" << degree[v];
    }
  }
  return os.str();
}

std::string smoothExpr(int dim, int entry, int coeff) {
  const std::uint32_t h = seedFor(dim, entry, coeff);
  const std::string p = var(h, 0, dim);
  const std::string q = var(h, 1, dim);
  const std::string r = var(h, 2, dim);
  switch (entry % 6) {
    case 0:
      return polynomialExpr(dim, entry, coeff, 3);
    case 1:
      return "sin(" + amp(h, 0) + "*" + p + " + " + amp(h, 1) + "*" + q +
             ")*cos(" + amp(h, 2) + "*" + r + ")";
    case 2:
      return "exp(0.5*" + p + " - " + amp(h, 1) + "*" + q + "^2)";
    case 3:
      return "(1 + " + p + "^2)*sin(" + q + ") + log(2 + " + r + "^2)";
    case 4:
      // Singularities stay well off the real axis so order 16 resolves them.
      return "sqrt(4 + " + p + "^2 + " + q + "^2)*" + r + " + 1/(2 + cos(0.5*" + p + "))";
    default:
      return "cos(" + amp(h, 0) + "*" + p + "*" + q + ") + " + r +
             "^3*exp(0.5*" + q + ")/(3 + sin(" + p + "))";
  }
}

std::vector<NamedCoordForm> coordForms(int n, int count) {
  std::vector<NamedCoordForm> out;
  for (int e = 0; e < count; ++e) {
    auto exprs = coeffExprs(n + 1, n + 1, e, false, 0);
    out.push_back({joinNames("coord" + std::to_string(n), e), exprs,
                   CoordNForm(n, parseAll(exprs, n + 1))});
  }
  return out;
}

std::vector<NamedCoordForm> polynomialCoordForms(int n, int count,
                                                 int maxDegree) {
  std::vector<NamedCoordForm> out;
  for (int e = 0; e < count; ++e) {
    auto exprs = coeffExprs(n + 1, n + 1, e, true, maxDegree);
    out.push_back({joinNames("poly" + std::to_string(n), e), exprs,
                   CoordNForm(n, parseAll(exprs, n + 1))});
  }
  return out;
}

std::vector<NamedAltForm> altForms(int m, int k, int count) {
  std::vector<NamedAltForm> out;
  const int coeffs = static_cast<int>(binomial(m, k));
  for (int e = 0; e < count; ++e) {
    auto exprs = coeffExprs(m, coeffs, e + 11 * k, false, 0);
    out.push_back({joinNames("alt" + std::to_string(m) + "." + std::to_string(k), e),
                   exprs, AltFormField(m, k, parseAll(exprs, m))});
  }
  return out;
}

std::vector<NamedAltForm> polynomialAltForms(int m, int k, int count) {
  std::vector<NamedAltForm> out;
  const int coeffs = static_cast<int>(binomial(m, k));
  for (int e = 0; e < count; ++e) {
    auto exprs = coeffExprs(m, coeffs, e + 11 * k, true, 3);
    out.push_back({joinNames("palt" + std::to_string(m) + "." + std::to_string(k), e),
                   exprs, AltFormField(m, k, parseAll(exprs, m))});
  }
  return out;
}

std::vector<NamedAltForm> gentleAltForms(int m, int k, int count) {
  std::vector<NamedAltForm> out;
  const int coeffs = static_cast<int>(binomial(m, k));
  for (int e = 0; e < count; ++e) {
    std::vector<std::string> exprs;
    for (int c = 0; c < coeffs; ++c) {
      if (e % 2 == 0) {
        exprs.push_back(polynomialExpr(m, e + 11 * k, c, 1));
        continue;
      }
      const std::uint32_t h = seedFor(m, e + 11 * k, c);
      exprs.push_back("sin(0.5*" + var(h, 0, m) + ")*cos(0.25*" + var(h, 1, m) +
                      ") + exp(0.2*" + var(h, 2, m) + ")");
    }
    out.push_back({joinNames("gentle" + std::to_string(m) + "." + std::to_string(k), e),
                   exprs, AltFormField(m, k, parseAll(exprs, m))});
  }
  return out;
}

namespace {

NamedCube cubeFromExprs(std::string name, int d, std::vector<std::string> exprs) {
  SmoothMap map(d, parseAll(exprs, d));
  return {std::move(name), std::move(exprs), SingularCube{std::move(map)}};
}

}  // namespace

NamedCube annulus() {
  return cubeFromExprs("annulus", 2,
                       {"(1+x0)*cos(2*pi*x1)", "(1+x0)*sin(2*pi*x1)"});
}

NamedAltForm annulusForm() {
  std::vector<std::string> exprs = {"-x1/2", "x0/2"};
  return {"half(x dy - y dx)", exprs, AltFormField(2, 1, parseAll(exprs, 2))};
}

NamedAltForm areaForm() {
  std::vector<std::string> exprs = {"1"};
  return {"dx^dy", exprs, AltFormField(2, 2, parseAll(exprs, 2))};
}

NamedCube identityCube(int d) {
  std::vector<std::string> exprs;
  for (int k = 0; k < d; ++k) exprs.push_back("x" + std::to_string(k));
  return cubeFromExprs("identity" + std::to_string(d), d, exprs);
}

NamedCube constantCube(int d, int m) {
  static constexpr std::array<double, 6> kValues = {0.3, -0.2, 0.5,
                                                    0.7, -0.4, 0.1};
  Point value;
  for (int r = 0; r < m; ++r) value.push_back(kValues[r % kValues.size()]);
  return {"constant" + std::to_string(d) + "->" + std::to_string(m),
          {},
          SingularCube{SmoothMap::constant(d, value)}};
}

NamedCube polynomialCube3to4() {
  return cubeFromExprs("poly3->4", 3,
                       {"x0 + x1*x2", "x1 - x0^2 + 0.5*x2", "x2 + x0*x1^2",
                        "x0*x1 + x2^2 - 1"});
}

std::vector<NamedCube> cubes(int d) {
  std::vector<NamedCube> out;
  out.push_back(identityCube(d));
  switch (d) {
    case 1:
      out.push_back(cubeFromExprs("helix", 1,
                                  {"cos(2*x0)", "sin(2*x0)", "x0^2"}));
      break;
    case 2:
      out.push_back(annulus());
      out.push_back(cubeFromExprs(
          "saddle", 2, {"x0", "x1", "x0^2 - x1^2 + sin(x0*x1)"}));
      break;
    case 3:
      out.push_back(polynomialCube3to4());
      out.push_back(cubeFromExprs(
          "warp3", 3,
          {"x0 + 0.2*sin(x1)", "x1 + 0.1*x0*x2", "x2 + 0.3*x0^2"}));
      break;
    default:
      break;
  }
  out.push_back(constantCube(d, 3));
  return out;
}

BoxDomain randomBox(std::mt19937_64& rng, int dim, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> a;
  std::vector<double> b;
  for (int j = 0; j < dim; ++j) {
    double s = u(rng);
    double t = u(rng);
    if (s > t) std::swap(s, t);
    a.push_back(s);
    b.push_back(t);
  }
  return BoxDomain(a, b);
}

Point randomPoint(std::mt19937_64& rng, int dim, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  Point x;
  for (int j = 0; j < dim; ++j) x.push_back(u(rng));
  return x;
}

}  // namespace stokes::catalog
