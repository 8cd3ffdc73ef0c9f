#pragma once

// Tensor-product Gauss-Legendre integration over boxes and their faces.

#include <vector>

#include "stokes/box.hpp"
#include "stokes/coordform.hpp"
#include "stokes/smoothfn.hpp"

namespace stokes {

inline constexpr int kDefaultOrder = 16;
inline constexpr int kMaxOrder = 64;
/// Default cap on the integration dimension (16^6 nodes at default order).
inline constexpr int kMaxBoxDim = 6;

/// Gauss-Legendre rule on [-1, 1].
struct QuadRule {
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Newton iteration on P_order from Chebyshev guesses. Rules are cached.
const QuadRule& glRule(int order);

/// sum over node multi-indices of prod(weights) * prod((hi-lo)/2) * f(node).
/// `maxDim` raises the dimension cap for callers that have bounded the cost
/// themselves (reduced-order high-dimensional runs).
double integrateBox(const ScalarField& f, const BoxDomain& b,
                    int order = kDefaultOrder, int maxDim = kMaxBoxDim);

/// y with c inserted at slot i.
Point insertCoord(int i, double c, const Point& y);

/// Integral of y -> f(insertCoord(i, c, y)) over b with coordinate i removed.
double faceIntegral(const ScalarField& f, const BoxDomain& b, int i, double c,
                    int order = kDefaultOrder, int maxDim = kMaxBoxDim);

/// sum_i [face(f_i, i, hi_i) - face(f_i, i, lo_i)] with f_i the signed
/// coefficients.
double bdryIntegral(const CoordNForm& w, const BoxDomain& b,
                    int order = kDefaultOrder, int maxDim = kMaxBoxDim);

struct StokesSides {
  double interior = 0.0;  // integral of dw over the box
  double boundary = 0.0;  // oriented boundary integral of w
  double residual() const;
};

StokesSides boxStokes(const CoordNForm& w, const BoxDomain& b,
                      int order = kDefaultOrder, int maxDim = kMaxBoxDim);

double boxStokesResidual(const CoordNForm& w, const BoxDomain& b,
                         int order = kDefaultOrder, int maxDim = kMaxBoxDim);

}  // namespace stokes
