#pragma once

// Alternating k-forms on R^m in the basis dx_I, I a strictly increasing
// k-subset of {0..m-1}. Coefficients are stored in lexicographic order of I.

#include <span>
#include <vector>

#include "stokes/coordform.hpp"
#include "stokes/finindex.hpp"
#include "stokes/smoothfn.hpp"

namespace stokes {

/// Largest ambient dimension for which index-set tables are built.
inline constexpr int kMaxAmbient = 10;

struct IndexSet {
  int ambient = 0;
  std::vector<int> indices;

  int degree() const noexcept { return static_cast<int>(indices.size()); }
  friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

long binomial(int n, int k);

/// All increasing k-subsets of {0..m-1}, lexicographic.
const std::vector<IndexSet>& indexSets(int m, int k);

/// Position of `s` in indexSets(s.ambient, s.degree()).
int rankOf(const IndexSet& s);

/// The set with its p-th element removed.
IndexSet withoutPosition(const IndexSet& s, int p);

/// Determinant by cofactor expansion; exact under dual arithmetic, so it
/// differentiates correctly even at singular matrices.
template <Carrier S>
S determinant(const MatrixOf<S>& a) {
  const int k = a.rows();
  if (k != a.cols()) throw DimensionError("determinant of a non-square matrix");
  switch (k) {
    case 0:
      return S(1.0);
    case 1:
      return a(0, 0);
    case 2:
      return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    case 3:
      return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
             a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
             a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    default:
      break;
  }
  S acc(0.0);
  MatrixOf<S> minor(k - 1, k - 1);
  for (int c = 0; c < k; ++c) {
    for (int r = 1; r < k; ++r)
      for (int cc = 0, mc = 0; cc < k; ++cc)
        if (cc != c) minor(r - 1, mc++) = a(r, cc);
    const S term = a(0, c) * determinant(minor);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

/// Value of an alternating k-form (given by its coefficients) on k vectors:
/// sum_I coeff_I det(M_I), M_I(r,c) = vectors[c][I[r]].
template <Carrier S>
S evaluateAltOver(std::span<const S> coeffs, int m, int k,
                  const std::vector<Point>& vectors) {
  const auto& sets = indexSets(m, k);
  S acc(0.0);
  MatrixOf<S> minor(k, k);
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c)
        minor(r, c) = S(vectors[c][sets[s].indices[r]]);
    acc = acc + coeffs[s] * determinant(minor);
  }
  return acc;
}

/// Coefficients of the composition w o L for L: R^d -> R^m:
/// result_J = sum_I coeff_I det(L[I, J]).
template <Carrier S>
std::vector<S> compLinearOver(std::span<const S> coeffs, int m, int k,
                              const MatrixOf<S>& l) {
  const int d = l.cols();
  const auto& rowsets = indexSets(m, k);
  const auto& colsets = indexSets(d, k);
  std::vector<S> out(colsets.size(), S(0.0));
  MatrixOf<S> minor(k, k);
  for (std::size_t jset = 0; jset < colsets.size(); ++jset) {
    S acc(0.0);
    for (std::size_t iset = 0; iset < rowsets.size(); ++iset) {
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
          minor(r, c) = l(rowsets[iset].indices[r], colsets[jset].indices[c]);
      acc = acc + coeffs[iset] * determinant(minor);
    }
    out[jset] = acc;
  }
  return out;
}

/// An alternating k-form on R^m at a single point.
struct AltForm {
  int ambient = 0;
  int degree = 0;
  std::vector<double> coeffs;

  AltForm() = default;
  AltForm(int ambient, int degree, std::vector<double> coeffs);

  double coeff(const IndexSet& s) const { return coeffs.at(rankOf(s)); }
};

/// A point-indexed alternating k-form on R^m.
struct AltFormField {
  int ambient = 0;
  int degree = 0;
  std::vector<ScalarField> coeffFields;

  AltFormField() = default;
  AltFormField(int ambient, int degree, std::vector<ScalarField> coeffFields);

  template <Carrier S>
  std::vector<S> eval(std::span<const S> x) const {
    std::vector<S> out;
    out.reserve(coeffFields.size());
    for (const auto& f : coeffFields) out.push_back(f.eval<S>(x));
    return out;
  }

  AltForm at(const Point& x) const;
};

double evaluateAlt(const AltForm& w, const std::vector<Point>& vectors);

/// w o L where L is m x d; the result lives on R^d.
AltForm compLinear(const AltForm& w, const Matrix& l);

/// (dw)_J(x) = sum_{p} (-1)^p d coeff_{J without J[p]} / d x_{J[p]} (x).
AltForm extDerivField(const AltFormField& w, const Point& x);

/// The same coefficient formula as a field, evaluable over double and Dual1.
AltFormField extDerivLazy(const AltFormField& w);

/// dw(x)(v_0..v_k) from the invariant formula
/// sum_j (-1)^j D_{v_j}[ y -> w(y)(v_0..^v_j..v_k) ](x).
/// Shares no code with extDerivField beyond field evaluation.
double extDerivByEvaluation(const AltFormField& w, const Point& x,
                            const std::vector<Point>& vectors);

enum class OuterDerivative { NestedDual, CentralDifference };

/// Max-abs coefficient of d(dw)(x). The inner derivative always uses duals;
/// the outer one uses nested duals (default) or central differences with
/// step h.
double ddResidual(const AltFormField& w, const Point& x, double h = 1e-4,
                  OuterDerivative outer = OuterDerivative::NestedDual);

/// omega_i(x) = w(x)(e_{succAbove(i,0)}, ..., e_{succAbove(i,n-1)}) for an
/// n-form on R^{n+1}.
CoordNForm toCoordNForm(const AltFormField& w);

/// Inverse of toCoordNForm: omega_i becomes the coefficient of the set
/// missing i.
AltFormField fromCoordNForm(const CoordNForm& w);

/// |dw(x)(e_0..e_n) - extDerivCoord(toCoordNForm(w))(x)|.
double bridgeResidual(const AltFormField& w, const Point& x);

}  // namespace stokes
