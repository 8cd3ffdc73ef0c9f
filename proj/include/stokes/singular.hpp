#pragma once

// Smooth singular cubes: globally smooth maps sigma: R^d -> R^m integrated
// over the unit cube [0,1]^d, with faces sigma o iota_{i,eps} and the true
// pullback through the Jacobian.

#include <vector>

#include "stokes/alternating.hpp"
#include "stokes/quadrature.hpp"
#include "stokes/smoothfn.hpp"

namespace stokes {

struct SingularCube {
  SmoothMap map;

  int dim() const noexcept { return map.domainDim(); }
  int ambient() const noexcept { return map.codomainDim(); }
};

/// iota_{i,eps}: R^n -> R^{n+1}, t -> (t_0..t_{i-1}, eps, t_i..t_{n-1}).
SmoothMap faceInclusion(int i, double eps, int n);

/// sigma o iota_{i,eps}.
SingularCube singularFace(const SingularCube& sigma, int i, int eps);

/// (sigma^* w)(x) = w(sigma(x)) o D sigma(x).
AltForm pullbackForm(const SingularCube& sigma, const AltFormField& w,
                     const Point& x);

/// sigma^* w as a field on R^d; evaluable over double and Dual1 (the
/// Jacobian itself consumes one dual level).
AltFormField pullbackField(const SingularCube& sigma, const AltFormField& w);

/// Integral over [0,1]^d of (sigma^* w)(x)(e_0, ..., e_{d-1}).
double integrateForm(const SingularCube& sigma, const AltFormField& w,
                     int order = kDefaultOrder);

/// | (sigma^* w)(iota(x))(e_{succAbove(i,0)}..) - ((sigma o iota)^* w)(x)(e_0..) |
double faceMatchingResidual(const SingularCube& sigma, const AltFormField& w,
                            int i, int eps, const Point& x);

struct SingularStokesSides {
  double interior = 0.0;  // integral of dw over sigma
  double boundary = 0.0;  // sum_i (-1)^i (int_{face_i(1)} w - int_{face_i(0)} w)
  /// faceTerms[2*i + eps] = integral of w over face (i, eps), unsigned.
  std::vector<double> faceTerms;
  double residual() const;
};

SingularStokesSides singularStokes(const SingularCube& sigma,
                                   const AltFormField& w,
                                   int order = kDefaultOrder);

double singularStokesResidual(const SingularCube& sigma, const AltFormField& w,
                              int order = kDefaultOrder);

/// Max-abs coefficient of d(sigma^* w)(x) - (sigma^* dw)(x).
double pullbackNaturalityResidual(const SingularCube& sigma,
                                  const AltFormField& w, const Point& x);

}  // namespace stokes
