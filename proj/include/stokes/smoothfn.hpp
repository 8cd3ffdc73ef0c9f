#pragma once

// Smooth scalar fields and maps over an abstract scalar carrier.
//
// Every field body is written once, generically, and instantiated for the
// three supported carriers: double, Dual1 (first derivatives) and Dual2
// (second derivatives). Derived fields such as partial derivatives evaluate
// their operand one nesting level deeper, so a field containing a partial
// can be evaluated over double and Dual1, but not over Dual2.

#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stokes/dual.hpp"
#include "stokes/errors.hpp"

namespace stokes {

using Point = std::vector<double>;

/// Small dense row-major matrix over a carrier.
template <Carrier S>
class MatrixOf {
 public:
  MatrixOf() = default;
  MatrixOf(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
              S(0.0)) {}

  static MatrixOf identity(int n) {
    MatrixOf m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1.0);
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  S& operator()(int r, int c) { return data_[index(r, c)]; }
  const S& operator()(int r, int c) const { return data_[index(r, c)]; }

  friend MatrixOf operator*(const MatrixOf& a, const MatrixOf& b) {
    if (a.cols_ != b.rows_)
      throw DimensionError("matrix product: inner dimensions differ");
    MatrixOf r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) {
        S acc(0.0);
        for (int k = 0; k < a.cols_; ++k) acc = acc + a(i, k) * b(k, j);
        r(i, j) = acc;
      }
    return r;
  }

  std::vector<S> apply(std::span<const S> v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw DimensionError("matrix-vector product: length mismatch");
    std::vector<S> out(static_cast<std::size_t>(rows_), S(0.0));
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) out[i] = out[i] + (*this)(i, k) * v[k];
    return out;
  }

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<S> data_;
};

using Matrix = MatrixOf<double>;

/// Evaluable smooth function R^dim -> R.
///
/// Values are immutable and cheap to copy (shared body).
class ScalarField {
 public:
  /// Wraps a generic callable `fn(std::span<const S>) -> S` instantiated for
  /// every supported carrier S.
  template <class Fn>
  static ScalarField generic(int dim, Fn fn, std::string label = {});

  static ScalarField constant(int dim, double c);
  static ScalarField coordinate(int dim, int k);

  int dim() const noexcept { return dim_; }
  const std::string& label() const noexcept { return label_; }

  /// Unchecked evaluation; `x.size()` must equal dim().
  template <Carrier S>
  S eval(std::span<const S> x) const;

  double operator()(std::span<const double> x) const {
    return body_->evalReal(x);
  }

 private:
  struct Body {
    virtual ~Body() = default;
    virtual double evalReal(std::span<const double> x) const = 0;
    virtual Dual1 evalD1(std::span<const Dual1> x) const = 0;
    virtual Dual2 evalD2(std::span<const Dual2> x) const = 0;
  };

  template <class Fn>
  struct GenericBody final : Body {
    explicit GenericBody(Fn f) : fn(std::move(f)) {}
    double evalReal(std::span<const double> x) const override { return fn(x); }
    Dual1 evalD1(std::span<const Dual1> x) const override { return fn(x); }
    Dual2 evalD2(std::span<const Dual2> x) const override { return fn(x); }
    Fn fn;
  };

  ScalarField(int dim, std::shared_ptr<const Body> body, std::string label)
      : dim_(dim), body_(std::move(body)), label_(std::move(label)) {}

  int dim_ = 0;
  std::shared_ptr<const Body> body_;
  std::string label_;
};

template <class Fn>
ScalarField ScalarField::generic(int dim, Fn fn, std::string label) {
  if (dim < 0) throw DimensionError("field dimension must be nonnegative");
  return ScalarField(dim, std::make_shared<GenericBody<Fn>>(std::move(fn)),
                     std::move(label));
}

template <Carrier S>
S ScalarField::eval(std::span<const S> x) const {
  if constexpr (std::same_as<S, double>) {
    return body_->evalReal(x);
  } else if constexpr (std::same_as<S, Dual1>) {
    return body_->evalD1(x);
  } else if constexpr (std::same_as<S, Dual2>) {
    return body_->evalD2(x);
  } else {
    static_assert(carrier_depth_v<S> <= 2, "carrier nesting deeper than 2");
  }
}

/// Partial derivative of `f` along coordinate `k` at `x`, over carrier S.
/// Seeds a one-slot dual one level deeper than S.
template <Carrier S>
S partialAt(const ScalarField& f, std::span<const S> x, int k) {
  if constexpr (carrier_depth_v<S> >= 2) {
    (void)f;
    (void)x;
    (void)k;
    throw EvaluationError(
        "partial derivative requested beyond the supported nesting depth");
  } else {
    using D = Dual<S>;
    std::vector<D> y;
    y.reserve(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
      y.push_back(static_cast<int>(j) == k ? D::variable(x[j], 0, 1)
                                           : D(x[j], 0));
    return f.eval<D>(y).d[0];
  }
}

// Pointwise field algebra. Operands must share a dimension.
ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a);
ScalarField operator*(double c, const ScalarField& a);

/// The field x -> d f / d x_k (x), evaluable over double and Dual1.
ScalarField partialField(const ScalarField& f, int k);

/// Evaluable smooth map R^domainDim -> R^codomainDim.
class SmoothMap {
 public:
  SmoothMap() = default;
  SmoothMap(int domainDim, std::vector<ScalarField> components);

  static SmoothMap identity(int dim);
  static SmoothMap constant(int domainDim, const Point& value);
  /// x -> A x + b.
  static SmoothMap affine(const Matrix& a, const Point& b);

  int domainDim() const noexcept { return domainDim_; }
  int codomainDim() const noexcept {
    return static_cast<int>(components_.size());
  }
  const std::vector<ScalarField>& components() const noexcept {
    return components_;
  }
  const ScalarField& component(int r) const { return components_.at(r); }

  template <Carrier S>
  std::vector<S> eval(std::span<const S> x) const {
    std::vector<S> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(c.eval<S>(x));
    return out;
  }

  Point operator()(const Point& x) const;

 private:
  int domainDim_ = 0;
  std::vector<ScalarField> components_;
};

/// outer o inner, evaluated by substitution (inner first, duals flow through).
SmoothMap compose(const SmoothMap& outer, const SmoothMap& inner);
ScalarField compose(const ScalarField& f, const SmoothMap& inner);

/// Checked real evaluation.
double evalField(const ScalarField& f, const Point& x);

/// All first partials by forward mode; one evaluation per block of
/// kMaxDirections coordinates.
std::vector<double> gradient(const ScalarField& f, const Point& x);

/// D sigma(x), rows indexed by component.
Matrix jacobian(const SmoothMap& sigma, const Point& x);

/// Central-difference Jacobian with step h.
Matrix fdJacobian(const SmoothMap& sigma, const Point& x, double h = 1e-5);

/// Jacobian over a carrier S, via Dual<S>. Needs domainDim <= kMaxDirections.
template <Carrier S>
MatrixOf<S> jacobianOver(const SmoothMap& sigma, std::span<const S> x) {
  const int d = sigma.domainDim();
  MatrixOf<S> out(sigma.codomainDim(), d);
  if constexpr (carrier_depth_v<S> >= 2) {
    (void)x;
    throw EvaluationError("Jacobian requested beyond the supported nesting depth");
  } else {
    using D = Dual<S>;
    for (int base = 0; base < d; base += kMaxDirections) {
      const int w = std::min(kMaxDirections, d - base);
      std::vector<D> y;
      y.reserve(x.size());
      for (int j = 0; j < d; ++j)
        y.push_back(j >= base && j < base + w ? D::variable(x[j], j - base, w)
                                              : D(x[j], 0));
      for (int r = 0; r < sigma.codomainDim(); ++r) {
        D value = sigma.component(r).eval<D>(y);
        for (int t = 0; t < w; ++t) out(r, base + t) = value.d[t];
      }
    }
  }
  return out;
}

}  // namespace stokes
