#pragma once

// The classical integral theorems as special cases of box Stokes:
// fundamental theorem of calculus, Green, divergence (Gauss), integration
// by parts. Each check returns the quantities on both sides.

#include <functional>

#include "stokes/box.hpp"
#include "stokes/coordform.hpp"
#include "stokes/quadrature.hpp"
#include "stokes/smoothfn.hpp"

namespace stokes {

struct FtcResult {
  double interior = 0.0;   // integral of f' over [a, b] via extDerivCoord
  double boundary = 0.0;   // bdryIntegral with omega_0 = f
  double closedForm = 0.0; // f(b) - f(a)
  double stokesResidual() const;
  double boundaryResidual() const;
};

FtcResult ftcCheck(const ScalarField& f, double a, double b,
                   int order = kDefaultOrder);

/// Adaptive Simpson on [a, b] to absolute tolerance `tol`; throws
/// EvaluationError if an interval still fails after `maxDepth` bisections.
/// Independent of the Gauss-Legendre code.
double adaptiveSimpson(const std::function<double(double)>& g, double a,
                       double b, double tol = 1e-12, int maxDepth = 30);

struct FtcPathsResult {
  double stokesPath = 0.0;   // Gauss-Legendre box integral of d(omega)
  double simpsonPath = 0.0;  // adaptive Simpson of f' (duals)
  double residual() const;
};

FtcPathsResult ftcPathsAgree(const ScalarField& f, double a, double b,
                             int order = kDefaultOrder);

struct GreenResult {
  double interior = 0.0;  // integral of (d0 Q - d1 P)
  double boundary = 0.0;  // bdryIntegral with omega = (Q, P)
  double fourEdge = 0.0;  // right Q - left Q - top P + bottom P
  double boundaryResidual() const;
  double fourEdgeResidual() const;
  double formulationGap() const;  // |boundary - fourEdge|
};

GreenResult greenCheck(const ScalarField& p, const ScalarField& q,
                       const BoxDomain& rect, int order = kDefaultOrder);

struct DivergenceResult {
  double interior = 0.0;  // integral of div F
  double flux = 0.0;      // sum_i face(F_i, hi_i) - face(F_i, lo_i)
  double viaForm = 0.0;   // bdryIntegral with omega_i = (-1)^i F_i
  double residual() const;
  double formResidual() const;
};

DivergenceResult divergenceCheck(const SmoothMap& field, const BoxDomain& b,
                                 int order = kDefaultOrder);

struct IbpResult {
  double lhs = 0.0;  // integral of f g'
  double rhs = 0.0;  // f(b)g(b) - f(a)g(a) - integral of f' g
  double residual() const;
};

IbpResult ibpCheck(const ScalarField& f, const ScalarField& g, double a,
                   double b, int order = kDefaultOrder);

}  // namespace stokes
