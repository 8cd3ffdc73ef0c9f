#pragma once

// Coordinate n-forms on R^{n+1}.
//
// A CoordNForm stores one coefficient field per omitted basis covector:
// omega_i multiplies dx_0 ^ ... ^ (dx_i omitted) ^ ... ^ dx_n. Its exterior
// derivative is the divergence of the signed coefficients
// f_i = (-1)^i omega_i.

#include <vector>

#include "stokes/smoothfn.hpp"

namespace stokes {

struct CoordNForm {
  int n = 0;
  std::vector<ScalarField> coeffs;

  CoordNForm() = default;
  /// Checks count == n+1 and every field has dimension n+1.
  CoordNForm(int n, std::vector<ScalarField> coeffs);

  int ambient() const noexcept { return n + 1; }
  const ScalarField& coeff(int i) const { return coeffs.at(i); }
};

/// x -> (-1)^i omega_i(x).
ScalarField signedCoeff(const CoordNForm& w, int i);

/// x -> sum_i (-1)^i d omega_i / d x_i (x); lazy, so it can be re-evaluated
/// at quadrature nodes over double or Dual1.
ScalarField extDerivCoord(const CoordNForm& w);

CoordNForm zeroForm(int n);
CoordNForm addForms(const CoordNForm& a, const CoordNForm& b);
CoordNForm scaleForm(double c, const CoordNForm& w);
CoordNForm negForm(const CoordNForm& w);

/// Every coefficient multiplied pointwise by f.
CoordNForm mulField(const ScalarField& f, const CoordNForm& w);

/// |d(f w)(x) - [f(x) dw(x) + sum_i (-1)^i d_i f(x) omega_i(x)]|.
double leibnizResidual(const ScalarField& f, const CoordNForm& w,
                       const Point& x);

/// Coefficient-wise precomposition: (A . w)_i(x) = omega_i(A x).
/// This is not the differential-form pullback.
CoordNForm precompose(const Matrix& a, const CoordNForm& w);

}  // namespace stokes
