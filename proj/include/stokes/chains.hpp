#pragma once

// Integer chains of singular cubes and of boxes.
//
// A face of a face of a registered cube is identified by the set of original
// coordinates it freezes and their values, so iterated faces reached along
// different routes compare equal and the boundary operator can cancel them
// exactly.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "stokes/box.hpp"
#include "stokes/coordform.hpp"
#include "stokes/quadrature.hpp"
#include "stokes/singular.hpp"

namespace stokes {

struct CubeTerm {
  std::string baseId;
  std::map<int, int> frozen;  // original coordinate -> 0 or 1

  friend auto operator<=>(const CubeTerm&, const CubeTerm&) = default;
  friend bool operator==(const CubeTerm&, const CubeTerm&) = default;
};

std::string toString(const CubeTerm& t);

class CubeRegistry {
 public:
  void add(std::string id, SingularCube cube);
  bool contains(const std::string& id) const;
  const SingularCube& at(const std::string& id) const;
  std::vector<std::string> ids() const;

 private:
  std::map<std::string, SingularCube> cubes_;
};

/// Dimension of the base cube minus the frozen count.
int effectiveDim(const CubeTerm& t, const CubeRegistry& registry);

/// Freezes the i-th still-free original coordinate to eps.
CubeTerm faceTerm(const CubeTerm& t, int i, int eps, int baseDim);

/// The base map with frozen slots filled in and free slots fed from the
/// argument in increasing original order.
SmoothMap termToMap(const CubeTerm& t, const CubeRegistry& registry);

/// Boundary coefficient of face (i, eps); the default is (-1)^i (2 eps - 1).
using BoundarySign = std::function<int(int i, int eps)>;
int standardBoundarySign(int i, int eps);

class SingularChain {
 public:
  SingularChain() = default;
  explicit SingularChain(int dim) : dim_(dim) {}

  static SingularChain single(const CubeTerm& t, int dim, long coeff = 1);

  int dim() const noexcept { return dim_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::map<CubeTerm, long>& terms() const noexcept { return terms_; }
  long coeff(const CubeTerm& t) const;

  /// Adds coeff * t, dropping the entry if it cancels to zero.
  void add(const CubeTerm& t, long coeff);

  friend SingularChain operator+(const SingularChain& a, const SingularChain& b);
  friend SingularChain operator*(long k, const SingularChain& c);
  friend bool operator==(const SingularChain&, const SingularChain&) = default;

 private:
  int dim_ = 0;
  std::map<CubeTerm, long> terms_;
};

SingularChain boundary(const SingularChain& c, const CubeRegistry& registry,
                       const BoundarySign& sign = standardBoundarySign);

/// boundary(boundary(t)) has empty support.
bool boundaryBoundaryIsZero(const CubeTerm& t, const CubeRegistry& registry,
                            const BoundarySign& sign = standardBoundarySign);

/// sum over terms of coeff * integrateForm(termToMap(t), w).
double integrateChain(const SingularChain& c, const AltFormField& w,
                      const CubeRegistry& registry, int order = kDefaultOrder);

/// |integral of w over boundary(boundary(t))|; no quadrature runs when the
/// double boundary is empty.
double doubleBoundaryIntegralZero(const CubeTerm& t, const AltFormField& w,
                                  const CubeRegistry& registry,
                                  int order = kDefaultOrder,
                                  const BoundarySign& sign = standardBoundarySign);

class BoxChain {
 public:
  BoxChain() = default;

  void add(const BoxDomain& b, long coeff);
  const std::map<BoxDomain, long>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  int dim() const;

 private:
  std::map<BoxDomain, long> terms_;
};

struct ChainStokesSides {
  double interior = 0.0;
  double boundary = 0.0;
  double residual() const;
};

ChainStokesSides chainStokes(const BoxChain& bc, const CoordNForm& w,
                             int order = kDefaultOrder);

double stokesChainResidual(const BoxChain& bc, const CoordNForm& w,
                           int order = kDefaultOrder);

/// b1.hi_i == b2.lo_i and every other coordinate interval is equal.
bool adjacent(const BoxDomain& b1, const BoxDomain& b2, int i);

/// |face(f_i, b1, i, b1.hi_i) - face(f_i, b2, i, b2.lo_i)|; throws
/// PreconditionError unless the boxes are adjacent in direction i.
double sharedFaceResidual(const BoxDomain& b1, const BoxDomain& b2, int i,
                          const CoordNForm& w, int order = kDefaultOrder);

/// |bdry(b1) + bdry(b2) - bdry(b1 union b2)| for boxes adjacent in i.
double mergedBoundaryResidual(const BoxDomain& b1, const BoxDomain& b2, int i,
                              const CoordNForm& w, int order = kDefaultOrder);

/// Splits b at value c of coordinate i.
std::pair<BoxDomain, BoxDomain> splitBox(const BoxDomain& b, int i, double c);

}  // namespace stokes
