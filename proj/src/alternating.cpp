#include "stokes/alternating.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace stokes {

namespace {

using SetTable = std::array<std::array<std::vector<IndexSet>, kMaxAmbient + 1>,
                            kMaxAmbient + 1>;

void enumerate(int m, int k, int start, IndexSet& current,
               std::vector<IndexSet>& out) {
  if (current.degree() == k) {
    out.push_back(current);
    return;
  }
  for (int v = start; v < m; ++v) {
    current.indices.push_back(v);
    enumerate(m, k, v + 1, current, out);
    current.indices.pop_back();
  }
}

const SetTable& setTable() {
  static const SetTable table = [] {
    SetTable t;
    for (int m = 0; m <= kMaxAmbient; ++m)
      for (int k = 0; k <= m; ++k) {
        IndexSet current{m, {}};
        enumerate(m, k, 0, current, t[m][k]);
      }
    return t;
  }();
  return table;
}

void requireVectors(int m, int k, const std::vector<Point>& vectors) {
  if (static_cast<int>(vectors.size()) != k)
    throw DimensionError("alternating " + std::to_string(k) +
                         "-form applied to " + std::to_string(vectors.size()) +
                         " vectors");
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != m)
      throw DimensionError("argument vector has dimension " +
                           std::to_string(v.size()) + ", expected " +
                           std::to_string(m));
}

void requirePoint(int m, const Point& x) {
  if (static_cast<int>(x.size()) != m)
    throw DimensionError("point has dimension " + std::to_string(x.size()) +
                         ", expected " + std::to_string(m));
}

// Max-abs over coefficients of d applied to `w` with outer partials taken by
// central differences of real evaluations.
AltForm extDerivCentral(const AltFormField& w, const Point& x, double h) {
  const int m = w.ambient;
  const auto& lower = indexSets(m, w.degree);
  const auto& upper = indexSets(m, w.degree + 1);
  // grads[s][t] = d coeff_s / d x_t
  std::vector<std::vector<double>> grads(lower.size(),
                                         std::vector<double>(m, 0.0));
  Point plus = x;
  Point minus = x;
  for (int t = 0; t < m; ++t) {
    plus[t] = x[t] + h;
    minus[t] = x[t] - h;
    for (std::size_t s = 0; s < lower.size(); ++s)
      grads[s][t] = (w.coeffFields[s](plus) - w.coeffFields[s](minus)) / (2 * h);
    plus[t] = x[t];
    minus[t] = x[t];
  }
  std::vector<double> out(upper.size(), 0.0);
  for (std::size_t j = 0; j < upper.size(); ++j)
    for (int p = 0; p <= w.degree; ++p) {
      const int t = upper[j].indices[p];
      const double term = grads[rankOf(withoutPosition(upper[j], p))][t];
      out[j] += (p % 2 == 0) ? term : -term;
    }
  return AltForm(m, w.degree + 1, std::move(out));
}

}  // namespace

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

const std::vector<IndexSet>& indexSets(int m, int k) {
  if (m < 0 || m > kMaxAmbient)
    throw CostCapError("ambient dimension " + std::to_string(m) +
                       " exceeds the cap of " + std::to_string(kMaxAmbient));
  if (k < 0 || k > m) {
    static const std::vector<IndexSet> kEmpty;
    return kEmpty;
  }
  return setTable()[m][k];
}

int rankOf(const IndexSet& s) {
  const int m = s.ambient;
  const int k = s.degree();
  for (int p = 0; p < k; ++p) {
    if (s.indices[p] < 0 || s.indices[p] >= m ||
        (p > 0 && s.indices[p] <= s.indices[p - 1]))
      throw IndexError("index set is not strictly increasing within bounds");
  }
  // Lexicographic rank: count the sets that precede s position by position.
  long rank = 0;
  int prev = -1;
  for (int p = 0; p < k; ++p) {
    for (int v = prev + 1; v < s.indices[p]; ++v)
      rank += binomial(m - v - 1, k - p - 1);
    prev = s.indices[p];
  }
  return static_cast<int>(rank);
}

IndexSet withoutPosition(const IndexSet& s, int p) {
  IndexSet out = s;
  out.indices.erase(out.indices.begin() + p);
  return out;
}

AltForm::AltForm(int m, int k, std::vector<double> c)
    : ambient(m), degree(k), coeffs(std::move(c)) {
  if (m < 0 || k < 0) throw DimensionError("negative form shape");
  if (static_cast<long>(coeffs.size()) != binomial(m, k))
    throw DimensionError("alternating " + std::to_string(k) + "-form on R^" +
                         std::to_string(m) + " needs " +
                         std::to_string(binomial(m, k)) + " coefficients, got " +
                         std::to_string(coeffs.size()));
}

AltFormField::AltFormField(int m, int k, std::vector<ScalarField> fields)
    : ambient(m), degree(k), coeffFields(std::move(fields)) {
  if (m < 0 || k < 0) throw DimensionError("negative form shape");
  if (static_cast<long>(coeffFields.size()) != binomial(m, k))
    throw DimensionError("alternating " + std::to_string(k) +
                         "-form field on R^" + std::to_string(m) + " needs " +
                         std::to_string(binomial(m, k)) +
                         " coefficient fields, got " +
                         std::to_string(coeffFields.size()));
  for (const auto& f : coeffFields)
    if (f.dim() != m)
      throw DimensionError("coefficient field has dimension " +
                           std::to_string(f.dim()) + ", expected " +
                           std::to_string(m));
}

AltForm AltFormField::at(const Point& x) const {
  requirePoint(ambient, x);
  return AltForm(ambient, degree, eval<double>(x));
}

double evaluateAlt(const AltForm& w, const std::vector<Point>& vectors) {
  requireVectors(w.ambient, w.degree, vectors);
  return evaluateAltOver<double>(w.coeffs, w.ambient, w.degree, vectors);
}

AltForm compLinear(const AltForm& w, const Matrix& l) {
  if (l.rows() != w.ambient)
    throw DimensionError("linear map has " + std::to_string(l.rows()) +
                         " rows, form lives on R^" + std::to_string(w.ambient));
  if (w.degree > l.cols())
    throw DimensionError("cannot pull a " + std::to_string(w.degree) +
                         "-form back to R^" + std::to_string(l.cols()));
  return AltForm(l.cols(), w.degree,
                 compLinearOver<double>(w.coeffs, w.ambient, w.degree, l));
}

AltForm extDerivField(const AltFormField& w, const Point& x) {
  requirePoint(w.ambient, x);
  if (w.degree >= w.ambient)
    throw DimensionError("exterior derivative of a top-degree form");
  const auto& lower = indexSets(w.ambient, w.degree);
  const auto& upper = indexSets(w.ambient, w.degree + 1);
  std::vector<std::vector<double>> grads;
  grads.reserve(lower.size());
  for (const auto& f : w.coeffFields) grads.push_back(gradient(f, x));
  std::vector<double> out(upper.size(), 0.0);
  for (std::size_t j = 0; j < upper.size(); ++j)
    for (int p = 0; p <= w.degree; ++p) {
      const int t = upper[j].indices[p];
      const double term = grads[rankOf(withoutPosition(upper[j], p))][t];
      out[j] += (p % 2 == 0) ? term : -term;
    }
  return AltForm(w.ambient, w.degree + 1, std::move(out));
}

AltFormField extDerivLazy(const AltFormField& w) {
  if (w.degree >= w.ambient)
    throw DimensionError("exterior derivative of a top-degree form");
  const auto& upper = indexSets(w.ambient, w.degree + 1);
  std::vector<ScalarField> fields;
  fields.reserve(upper.size());
  for (const auto& set : upper) {
    // (source coefficient rank, differentiation slot, sign) per term
    std::vector<std::array<int, 3>> terms;
    for (int p = 0; p < set.degree(); ++p)
      terms.push_back({rankOf(withoutPosition(set, p)), set.indices[p],
                       p % 2 == 0 ? 1 : -1});
    fields.push_back(ScalarField::generic(w.ambient, [w, terms](auto x) {
      using S = typename decltype(x)::value_type;
      S acc(0.0);
      for (const auto& [src, slot, sign] : terms) {
        const S p = partialAt<S>(w.coeffFields[src], x, slot);
        acc = sign > 0 ? acc + p : acc - p;
      }
      return acc;
    }));
  }
  return AltFormField(w.ambient, w.degree + 1, std::move(fields));
}

double extDerivByEvaluation(const AltFormField& w, const Point& x,
                            const std::vector<Point>& vectors) {
  requirePoint(w.ambient, x);
  requireVectors(w.ambient, w.degree + 1, vectors);
  double acc = 0.0;
  for (int j = 0; j <= w.degree; ++j) {
    std::vector<Point> rest = vectors;
    rest.erase(rest.begin() + j);
    std::vector<Dual1> y;
    y.reserve(x.size());
    for (std::size_t r = 0; r < x.size(); ++r) {
      Dual1 yr(x[r], 1);
      yr.d[0] = vectors[j][r];
      y.push_back(yr);
    }
    const std::vector<Dual1> coeffs = w.eval<Dual1>(y);
    const Dual1 value =
        evaluateAltOver<Dual1>(coeffs, w.ambient, w.degree, rest);
    acc += (j % 2 == 0) ? value.d[0] : -value.d[0];
  }
  return acc;
}

double ddResidual(const AltFormField& w, const Point& x, double h,
                  OuterDerivative outer) {
  requirePoint(w.ambient, x);
  if (w.degree + 2 > w.ambient)
    throw DimensionError("d(dw) needs degree + 2 <= ambient");
  const AltFormField inner = extDerivLazy(w);
  AltForm dd;
  if (outer == OuterDerivative::NestedDual) {
    dd = extDerivField(inner, x);
  } else {
    if (!(h > 0.0)) throw PreconditionError("central-difference step must be > 0");
    dd = extDerivCentral(inner, x, h);
  }
  double worst = 0.0;
  for (double c : dd.coeffs) {
    if (!std::isfinite(c)) throw EvaluationError("d(dw): non-finite result");
    worst = std::max(worst, std::abs(c));
  }
  return worst;
}

CoordNForm toCoordNForm(const AltFormField& w) {
  if (w.degree + 1 != w.ambient)
    throw DimensionError("coordinate representation needs degree = ambient - 1");
  const int n = w.degree;
  std::vector<ScalarField> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    std::vector<Point> basis;
    for (int j = 0; j < n; ++j) {
      Point e(static_cast<std::size_t>(n + 1), 0.0);
      e[succAbove(i, j)] = 1.0;
      basis.push_back(std::move(e));
    }
    coeffs.push_back(ScalarField::generic(n + 1, [w, basis, n](auto x) {
      using S = typename decltype(x)::value_type;
      const std::vector<S> c = w.eval<S>(x);
      return evaluateAltOver<S>(c, n + 1, n, basis);
    }));
  }
  return CoordNForm(n, std::move(coeffs));
}

AltFormField fromCoordNForm(const CoordNForm& w) {
  const int n = w.n;
  std::vector<ScalarField> fields(static_cast<std::size_t>(n + 1),
                                  ScalarField::constant(n + 1, 0.0));
  for (int i = 0; i <= n; ++i) {
    IndexSet missing{n + 1, {}};
    for (int j = 0; j < n; ++j) missing.indices.push_back(succAbove(i, j));
    fields[rankOf(missing)] = w.coeffs[i];
  }
  return AltFormField(n + 1, n, std::move(fields));
}

double bridgeResidual(const AltFormField& w, const Point& x) {
  if (w.degree + 1 != w.ambient)
    throw DimensionError("bridge identity needs degree = ambient - 1");
  const int m = w.ambient;
  std::vector<Point> basis;
  for (int j = 0; j < m; ++j) {
    Point e(static_cast<std::size_t>(m), 0.0);
    e[j] = 1.0;
    basis.push_back(std::move(e));
  }
  const double abstractSide = evaluateAlt(extDerivField(w, x), basis);
  const double coordSide = evalField(extDerivCoord(toCoordNForm(w)), x);
  return std::abs(abstractSide - coordSide);
}

}  // namespace stokes
