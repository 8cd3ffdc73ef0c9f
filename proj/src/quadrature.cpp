#include "stokes/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace stokes {

namespace {

QuadRule buildRule(int n) {
  QuadRule rule;
  rule.order = n;
  rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
  rule.weights.assign(static_cast<std::size_t>(n), 0.0);
  // Roots come in +/- pairs; compute the nonnegative half and mirror it so
  // the rule is exactly symmetric.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double pn = n == 1 ? x : p1;
      const double pm = n == 1 ? 1.0 : p0;
      dp = n * (x * pn - pm) / (x * x - 1.0);
      const double step = pn / dp;
      x -= step;
      if (std::abs(step) <= 1e-15) break;
    }
    // Derivative at the converged root for the weight.
    {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double pn = n == 1 ? x : p1;
      const double pm = n == 1 ? 1.0 : p0;
      dp = n * (x * pn - pm) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    if (lo == hi) {
      rule.nodes[lo] = 0.0;
      rule.weights[lo] = w;
    } else {
      rule.nodes[lo] = -std::abs(x);
      rule.nodes[hi] = std::abs(x);
      rule.weights[lo] = w;
      rule.weights[hi] = w;
    }
  }
  return rule;
}

// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      carry += (sum - t) + v;
    else
      carry += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

void checkOrder(int order) {
  if (order < 1 || order > kMaxOrder)
    throw IndexError("quadrature order " + std::to_string(order) +
                     " outside 1.." + std::to_string(kMaxOrder));
}

}  // namespace

const QuadRule& glRule(int order) {
  checkOrder(order);
  static const std::array<QuadRule, kMaxOrder + 1> rules = [] {
    std::array<QuadRule, kMaxOrder + 1> r;
    for (int n = 1; n <= kMaxOrder; ++n) r[n] = buildRule(n);
    return r;
  }();
  return rules[static_cast<std::size_t>(order)];
}

double integrateBox(const ScalarField& f, const BoxDomain& b, int order,
                    int maxDim) {
  const int d = b.dim();
  if (f.dim() != d)
    throw DimensionError("integrand dimension " + std::to_string(f.dim()) +
                         " differs from box dimension " + std::to_string(d));
  if (d > maxDim)
    throw CostCapError("box dimension " + std::to_string(d) +
                       " exceeds the cap of " + std::to_string(maxDim));
  const QuadRule& rule = glRule(order);

  std::vector<double> half(static_cast<std::size_t>(d));
  std::vector<double> mid(static_cast<std::size_t>(d));
  double jac = 1.0;
  for (int j = 0; j < d; ++j) {
    half[j] = 0.5 * (b.hi[j] - b.lo[j]);
    mid[j] = 0.5 * (b.hi[j] + b.lo[j]);
    jac *= half[j];
  }

  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  Point x(static_cast<std::size_t>(d));
  CompensatedSum acc;
  for (;;) {
    double w = 1.0;
    for (int j = 0; j < d; ++j) {
      x[j] = mid[j] + half[j] * rule.nodes[idx[j]];
      w *= rule.weights[idx[j]];
    }
    acc.add(w * f(x));
    int j = d - 1;
    while (j >= 0 && ++idx[j] == order) idx[j--] = 0;
    if (j < 0) break;
  }
  const double result = jac * acc.value();
  if (!std::isfinite(result))
    throw EvaluationError("box integral is not finite");
  return result;
}

Point insertCoord(int i, double c, const Point& y) {
  if (i < 0 || i > static_cast<int>(y.size()))
    throw IndexError("insertion slot " + std::to_string(i) +
                     " out of range for a point of dimension " +
                     std::to_string(y.size()));
  Point out;
  out.reserve(y.size() + 1);
  out.insert(out.end(), y.begin(), y.begin() + i);
  out.push_back(c);
  out.insert(out.end(), y.begin() + i, y.end());
  return out;
}

double faceIntegral(const ScalarField& f, const BoxDomain& b, int i, double c,
                    int order, int maxDim) {
  if (f.dim() != b.dim())
    throw DimensionError("face integrand dimension differs from box dimension");
  if (i < 0 || i >= b.dim())
    throw IndexError("face direction " + std::to_string(i) +
                     " out of range for dimension " + std::to_string(b.dim()));
  const ScalarField restricted =
      ScalarField::generic(b.dim() - 1, [f, i, c](auto y) {
        using S = typename decltype(y)::value_type;
        std::vector<S> x;
        x.reserve(y.size() + 1);
        x.insert(x.end(), y.begin(), y.begin() + i);
        x.push_back(S(c));
        x.insert(x.end(), y.begin() + i, y.end());
        return f.eval<S>(x);
      });
  return integrateBox(restricted, deleteCoord(b, i), order, maxDim);
}

double bdryIntegral(const CoordNForm& w, const BoxDomain& b, int order,
                    int maxDim) {
  if (w.ambient() != b.dim())
    throw DimensionError("form ambient " + std::to_string(w.ambient()) +
                         " differs from box dimension " +
                         std::to_string(b.dim()));
  CompensatedSum acc;
  for (int i = 0; i <= w.n; ++i) {
    const ScalarField f = signedCoeff(w, i);
    acc.add(faceIntegral(f, b, i, b.hi[i], order, maxDim));
    acc.add(-faceIntegral(f, b, i, b.lo[i], order, maxDim));
  }
  return acc.value();
}

double StokesSides::residual() const { return std::abs(interior - boundary); }

StokesSides boxStokes(const CoordNForm& w, const BoxDomain& b, int order,
                      int maxDim) {
  return {integrateBox(extDerivCoord(w), b, order, maxDim),
          bdryIntegral(w, b, order, maxDim)};
}

double boxStokesResidual(const CoordNForm& w, const BoxDomain& b, int order,
                         int maxDim) {
  return boxStokes(w, b, order, maxDim).residual();
}

}  // namespace stokes
