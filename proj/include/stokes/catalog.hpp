#pragma once

// Fixed catalogs of smooth forms, maps and cubes used by the verification
// suites. Catalog contents do not depend on any user seed; only sample
// points and boxes do.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "stokes/alternating.hpp"
#include "stokes/box.hpp"
#include "stokes/coordform.hpp"
#include "stokes/singular.hpp"

namespace stokes::catalog {

/// Expression text for coefficient `coeff` of catalog entry `entry` in
/// dimension `dim`. Entries cycle through polynomial, trigonometric,
/// exponential, logarithmic and rational-with-no-pole families.
std::string smoothExpr(int dim, int entry, int coeff);

/// Polynomial expression with every per-variable degree <= maxDegree.
std::string polynomialExpr(int dim, int entry, int coeff, int maxDegree);

struct NamedCoordForm {
  std::string name;
  std::vector<std::string> exprs;
  CoordNForm form;
};

/// `count` smooth coordinate n-forms on R^{n+1}.
std::vector<NamedCoordForm> coordForms(int n, int count = 20);

/// Polynomial coordinate n-forms whose per-axis degree stays <= maxDegree.
std::vector<NamedCoordForm> polynomialCoordForms(int n, int count,
                                                 int maxDegree);

struct NamedAltForm {
  std::string name;
  std::vector<std::string> exprs;
  AltFormField form;
};

/// `count` smooth alternating k-form fields on R^m.
std::vector<NamedAltForm> altForms(int m, int k, int count);

/// Polynomial-only alternating k-form fields on R^m.
std::vector<NamedAltForm> polynomialAltForms(int m, int k, int count);

/// Multilinear or low-frequency forms. Used on cubes whose image wraps an
/// angle, where generic catalog forms are under-resolved at order 16.
std::vector<NamedAltForm> gentleAltForms(int m, int k, int count);

struct NamedCube {
  std::string name;
  std::vector<std::string> exprs;  // empty for programmatic maps
  SingularCube cube;
};

/// sigma(r, theta) = ((1+r) cos 2 pi theta, (1+r) sin 2 pi theta).
NamedCube annulus();
/// 1/2 (x dy - y dx) on R^2; its exterior derivative is dx ^ dy.
NamedAltForm annulusForm();
/// dx ^ dy on R^2.
NamedAltForm areaForm();

NamedCube identityCube(int d);
NamedCube constantCube(int d, int m);
/// A polynomial map R^3 -> R^4.
NamedCube polynomialCube3to4();

/// Cubes of dimension d in the catalog (identity, annulus, polynomial,
/// constant, and curved maps).
std::vector<NamedCube> cubes(int d);

/// Uniform random box inside [lo, hi]^dim.
BoxDomain randomBox(std::mt19937_64& rng, int dim, double lo, double hi);

/// Uniform random point in [lo, hi]^dim.
Point randomPoint(std::mt19937_64& rng, int dim, double lo, double hi);

}  // namespace stokes::catalog
