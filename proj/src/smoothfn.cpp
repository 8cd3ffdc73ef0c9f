#include "stokes/smoothfn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace stokes {

namespace {

void requireSameDim(const ScalarField& a, const ScalarField& b,
                    const char* what) {
  if (a.dim() != b.dim())
    throw DimensionError(std::string(what) + ": field dimensions differ (" +
                         std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()) + ")");
}

void requirePointDim(int expected, const Point& x, const char* what) {
  if (static_cast<int>(x.size()) != expected)
    throw DimensionError(std::string(what) + ": point has dimension " +
                         std::to_string(x.size()) + ", expected " +
                         std::to_string(expected));
}

void requireFinite(double v, const char* what) {
  if (!std::isfinite(v))
    throw EvaluationError(std::string(what) + ": non-finite result");
}

}  // namespace

ScalarField ScalarField::constant(int dim, double c) {
  return generic(
      dim, [c](auto x) { return typename decltype(x)::value_type(c); },
      std::to_string(c));
}

ScalarField ScalarField::coordinate(int dim, int k) {
  if (k < 0 || k >= dim)
    throw IndexError("coordinate index " + std::to_string(k) +
                     " out of range for dimension " + std::to_string(dim));
  return generic(
      dim,
      [k](auto x) {
        return typename decltype(x)::value_type(x[static_cast<std::size_t>(k)]);
      },
      "x" + std::to_string(k));
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  requireSameDim(a, b, "field sum");
  return ScalarField::generic(a.dim(), [a, b](auto x) {
    using S = typename decltype(x)::value_type;
    return a.eval<S>(x) + b.eval<S>(x);
  });
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  requireSameDim(a, b, "field difference");
  return ScalarField::generic(a.dim(), [a, b](auto x) {
    using S = typename decltype(x)::value_type;
    return a.eval<S>(x) - b.eval<S>(x);
  });
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  requireSameDim(a, b, "field product");
  return ScalarField::generic(a.dim(), [a, b](auto x) {
    using S = typename decltype(x)::value_type;
    return a.eval<S>(x) * b.eval<S>(x);
  });
}

ScalarField operator-(const ScalarField& a) {
  return ScalarField::generic(a.dim(), [a](auto x) {
    using S = typename decltype(x)::value_type;
    return -a.eval<S>(x);
  });
}

ScalarField operator*(double c, const ScalarField& a) {
  return ScalarField::generic(a.dim(), [c, a](auto x) {
    using S = typename decltype(x)::value_type;
    return S(c) * a.eval<S>(x);
  });
}

ScalarField partialField(const ScalarField& f, int k) {
  if (k < 0 || k >= f.dim())
    throw IndexError("partial derivative index " + std::to_string(k) +
                     " out of range for dimension " + std::to_string(f.dim()));
  return ScalarField::generic(f.dim(), [f, k](auto x) {
    using S = typename decltype(x)::value_type;
    return partialAt<S>(f, x, k);
  });
}

SmoothMap::SmoothMap(int domainDim, std::vector<ScalarField> components)
    : domainDim_(domainDim), components_(std::move(components)) {
  if (domainDim_ < 0)
    throw DimensionError("map domain dimension must be nonnegative");
  for (const auto& c : components_)
    if (c.dim() != domainDim_)
      throw DimensionError("map component dimension " +
                           std::to_string(c.dim()) + " differs from domain " +
                           std::to_string(domainDim_));
}

SmoothMap SmoothMap::identity(int dim) {
  std::vector<ScalarField> comps;
  for (int k = 0; k < dim; ++k) comps.push_back(ScalarField::coordinate(dim, k));
  return SmoothMap(dim, std::move(comps));
}

SmoothMap SmoothMap::constant(int domainDim, const Point& value) {
  std::vector<ScalarField> comps;
  for (double v : value) comps.push_back(ScalarField::constant(domainDim, v));
  return SmoothMap(domainDim, std::move(comps));
}

SmoothMap SmoothMap::affine(const Matrix& a, const Point& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw DimensionError("affine map: offset length differs from row count");
  std::vector<ScalarField> comps;
  for (int r = 0; r < a.rows(); ++r) {
    std::vector<double> row;
    for (int c = 0; c < a.cols(); ++c) row.push_back(a(r, c));
    const double offset = b[static_cast<std::size_t>(r)];
    comps.push_back(ScalarField::generic(a.cols(), [row, offset](auto x) {
      using S = typename decltype(x)::value_type;
      S acc(offset);
      for (std::size_t c = 0; c < row.size(); ++c) acc = acc + S(row[c]) * x[c];
      return acc;
    }));
  }
  return SmoothMap(a.cols(), std::move(comps));
}

Point SmoothMap::operator()(const Point& x) const {
  requirePointDim(domainDim_, x, "map evaluation");
  return eval<double>(x);
}

ScalarField compose(const ScalarField& f, const SmoothMap& inner) {
  if (f.dim() != inner.codomainDim())
    throw DimensionError("composition: field dimension " +
                         std::to_string(f.dim()) + " differs from codomain " +
                         std::to_string(inner.codomainDim()));
  return ScalarField::generic(inner.domainDim(), [f, inner](auto x) {
    using S = typename decltype(x)::value_type;
    const std::vector<S> y = inner.eval<S>(x);
    return f.eval<S>(y);
  });
}

SmoothMap compose(const SmoothMap& outer, const SmoothMap& inner) {
  if (outer.domainDim() != inner.codomainDim())
    throw DimensionError("map composition: inner codomain " +
                         std::to_string(inner.codomainDim()) +
                         " differs from outer domain " +
                         std::to_string(outer.domainDim()));
  std::vector<ScalarField> comps;
  comps.reserve(outer.components().size());
  for (const auto& c : outer.components()) comps.push_back(compose(c, inner));
  return SmoothMap(inner.domainDim(), std::move(comps));
}

double evalField(const ScalarField& f, const Point& x) {
  requirePointDim(f.dim(), x, "field evaluation");
  return f(x);
}

std::vector<double> gradient(const ScalarField& f, const Point& x) {
  requirePointDim(f.dim(), x, "gradient");
  const int d = f.dim();
  std::vector<double> grad(static_cast<std::size_t>(d), 0.0);
  for (int base = 0; base < d; base += kMaxDirections) {
    const int w = std::min(kMaxDirections, d - base);
    std::vector<Dual1> y;
    y.reserve(x.size());
    for (int j = 0; j < d; ++j)
      y.push_back(j >= base && j < base + w
                      ? Dual1::variable(x[j], j - base, w)
                      : Dual1(x[j], 0));
    const Dual1 value = f.eval<Dual1>(y);
    requireFinite(value.v, "gradient");
    for (int t = 0; t < w; ++t) {
      requireFinite(value.d[t], "gradient");
      grad[static_cast<std::size_t>(base + t)] = value.d[t];
    }
  }
  return grad;
}

Matrix jacobian(const SmoothMap& sigma, const Point& x) {
  requirePointDim(sigma.domainDim(), x, "jacobian");
  Matrix out(sigma.codomainDim(), sigma.domainDim());
  for (int r = 0; r < sigma.codomainDim(); ++r) {
    const std::vector<double> row = gradient(sigma.component(r), x);
    for (int c = 0; c < sigma.domainDim(); ++c) out(r, c) = row[c];
  }
  return out;
}

Matrix fdJacobian(const SmoothMap& sigma, const Point& x, double h) {
  requirePointDim(sigma.domainDim(), x, "finite-difference jacobian");
  if (!(h > 0.0)) throw PreconditionError("finite-difference step must be > 0");
  Matrix out(sigma.codomainDim(), sigma.domainDim());
  Point plus = x;
  Point minus = x;
  for (int c = 0; c < sigma.domainDim(); ++c) {
    plus[c] = x[c] + h;
    minus[c] = x[c] - h;
    const Point fp = sigma(plus);
    const Point fm = sigma(minus);
    for (int r = 0; r < sigma.codomainDim(); ++r)
      out(r, c) = (fp[r] - fm[r]) / (2.0 * h);
    plus[c] = x[c];
    minus[c] = x[c];
  }
  return out;
}

}  // namespace stokes
