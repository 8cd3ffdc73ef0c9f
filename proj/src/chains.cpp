#include "stokes/chains.hpp"

#include <cmath>
#include <sstream>

namespace stokes {

std::string toString(const CubeTerm& t) {
  std::ostringstream os;
  os << t.baseId << "{";
  bool first = true;
  for (const auto& [k, v] : t.frozen) {
    if (!first) os << ",";
    os << k << "->" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

void CubeRegistry::add(std::string id, SingularCube cube) {
  cubes_.insert_or_assign(std::move(id), std::move(cube));
}

bool CubeRegistry::contains(const std::string& id) const {
  return cubes_.count(id) != 0;
}

const SingularCube& CubeRegistry::at(const std::string& id) const {
  auto it = cubes_.find(id);
  if (it == cubes_.end()) throw IndexError("unknown cube id '" + id + "'");
  return it->second;
}

std::vector<std::string> CubeRegistry::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, cube] : cubes_) out.push_back(id);
  return out;
}

int effectiveDim(const CubeTerm& t, const CubeRegistry& registry) {
  return registry.at(t.baseId).dim() - static_cast<int>(t.frozen.size());
}

CubeTerm faceTerm(const CubeTerm& t, int i, int eps, int baseDim) {
  const int free = baseDim - static_cast<int>(t.frozen.size());
  if (i < 0 || i >= free)
    throw IndexError("face index " + std::to_string(i) +
                     " out of range for effective dimension " +
                     std::to_string(free));
  if (eps != 0 && eps != 1) throw IndexError("face value must be 0 or 1");
  int seen = 0;
  for (int k = 0; k < baseDim; ++k) {
    if (t.frozen.count(k)) continue;
    if (seen++ == i) {
      CubeTerm out = t;
      out.frozen.emplace(k, eps);
      return out;
    }
  }
  throw IndexError("frozen coordinates exceed the base dimension");
}

SmoothMap termToMap(const CubeTerm& t, const CubeRegistry& registry) {
  const SingularCube& base = registry.at(t.baseId);
  const int d = base.dim();
  const int free = d - static_cast<int>(t.frozen.size());
  if (free < 0) throw DimensionError("more frozen coordinates than dimensions");
  std::vector<ScalarField> comps;
  int next = 0;
  for (int k = 0; k < d; ++k) {
    auto it = t.frozen.find(k);
    if (it != t.frozen.end())
      comps.push_back(ScalarField::constant(free, it->second));
    else
      comps.push_back(ScalarField::coordinate(free, next++));
  }
  return compose(base.map, SmoothMap(free, std::move(comps)));
}

int standardBoundarySign(int i, int eps) {
  const int orient = eps == 1 ? 1 : -1;
  return (i % 2 == 0) ? orient : -orient;
}

SingularChain SingularChain::single(const CubeTerm& t, int dim, long coeff) {
  SingularChain c(dim);
  c.add(t, coeff);
  return c;
}

long SingularChain::coeff(const CubeTerm& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? 0 : it->second;
}

void SingularChain::add(const CubeTerm& t, long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SingularChain operator+(const SingularChain& a, const SingularChain& b) {
  if (!a.empty() && !b.empty() && a.dim_ != b.dim_)
    throw DimensionError("adding chains of different dimensions");
  SingularChain out = a.empty() ? SingularChain(b.dim_) : a;
  for (const auto& [t, k] : b.terms_) out.add(t, k);
  return out;
}

SingularChain operator*(long k, const SingularChain& c) {
  SingularChain out(c.dim_);
  for (const auto& [t, v] : c.terms_) out.add(t, k * v);
  return out;
}

SingularChain boundary(const SingularChain& c, const CubeRegistry& registry,
                       const BoundarySign& sign) {
  if (c.dim() < 1) throw DimensionError("boundary of a 0-chain is undefined");
  SingularChain out(c.dim() - 1);
  for (const auto& [t, coeff] : c.terms()) {
    const int baseDim = registry.at(t.baseId).dim();
    if (baseDim - static_cast<int>(t.frozen.size()) != c.dim())
      throw DimensionError("chain term " + toString(t) +
                           " does not have the chain's dimension");
    for (int i = 0; i < c.dim(); ++i)
      for (int eps = 0; eps <= 1; ++eps)
        out.add(faceTerm(t, i, eps, baseDim), coeff * sign(i, eps));
  }
  return out;
}

bool boundaryBoundaryIsZero(const CubeTerm& t, const CubeRegistry& registry,
                            const BoundarySign& sign) {
  const int d = effectiveDim(t, registry);
  if (d < 2) throw DimensionError("double boundary needs dimension >= 2");
  const SingularChain c = SingularChain::single(t, d);
  return boundary(boundary(c, registry, sign), registry, sign).empty();
}

double integrateChain(const SingularChain& c, const AltFormField& w,
                      const CubeRegistry& registry, int order) {
  double acc = 0.0;
  for (const auto& [t, coeff] : c.terms())
    acc += static_cast<double>(coeff) *
           integrateForm(SingularCube{termToMap(t, registry)}, w, order);
  return acc;
}

double doubleBoundaryIntegralZero(const CubeTerm& t, const AltFormField& w,
                                  const CubeRegistry& registry, int order,
                                  const BoundarySign& sign) {
  const int d = effectiveDim(t, registry);
  if (d < 2) throw DimensionError("double boundary needs dimension >= 2");
  const SingularChain dd = boundary(
      boundary(SingularChain::single(t, d), registry, sign), registry, sign);
  return std::abs(integrateChain(dd, w, registry, order));
}

void BoxChain::add(const BoxDomain& b, long coeff) {
  if (!terms_.empty() && terms_.begin()->first.dim() != b.dim())
    throw DimensionError("box chain entries must share a dimension");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int BoxChain::dim() const {
  return terms_.empty() ? 0 : terms_.begin()->first.dim();
}

double ChainStokesSides::residual() const {
  return std::abs(interior - boundary);
}

ChainStokesSides chainStokes(const BoxChain& bc, const CoordNForm& w,
                             int order) {
  ChainStokesSides sides;
  const ScalarField dw = extDerivCoord(w);
  for (const auto& [b, k] : bc.terms()) {
    sides.interior += static_cast<double>(k) * integrateBox(dw, b, order);
    sides.boundary += static_cast<double>(k) * bdryIntegral(w, b, order);
  }
  return sides;
}

double stokesChainResidual(const BoxChain& bc, const CoordNForm& w, int order) {
  return chainStokes(bc, w, order).residual();
}

bool adjacent(const BoxDomain& b1, const BoxDomain& b2, int i) {
  if (b1.dim() != b2.dim() || i < 0 || i >= b1.dim()) return false;
  for (int j = 0; j < b1.dim(); ++j) {
    if (j == i) {
      if (b1.hi[j] != b2.lo[j]) return false;
    } else if (b1.lo[j] != b2.lo[j] || b1.hi[j] != b2.hi[j]) {
      return false;
    }
  }
  return true;
}

double sharedFaceResidual(const BoxDomain& b1, const BoxDomain& b2, int i,
                          const CoordNForm& w, int order) {
  if (!adjacent(b1, b2, i))
    throw PreconditionError("boxes are not adjacent in direction " +
                            std::to_string(i));
  const ScalarField f = signedCoeff(w, i);
  return std::abs(faceIntegral(f, b1, i, b1.hi[i], order) -
                  faceIntegral(f, b2, i, b2.lo[i], order));
}

double mergedBoundaryResidual(const BoxDomain& b1, const BoxDomain& b2, int i,
                              const CoordNForm& w, int order) {
  if (!adjacent(b1, b2, i))
    throw PreconditionError("boxes are not adjacent in direction " +
                            std::to_string(i));
  BoxDomain merged = b1;
  merged.hi[i] = b2.hi[i];
  return std::abs(bdryIntegral(w, b1, order) + bdryIntegral(w, b2, order) -
                  bdryIntegral(w, merged, order));
}

std::pair<BoxDomain, BoxDomain> splitBox(const BoxDomain& b, int i, double c) {
  if (i < 0 || i >= b.dim())
    throw IndexError("split direction out of range");
  if (c < b.lo[i] || c > b.hi[i])
    throw PreconditionError("split value outside the box");
  BoxDomain left = b;
  BoxDomain right = b;
  left.hi[i] = c;
  right.lo[i] = c;
  return {left, right};
}

}  // namespace stokes
