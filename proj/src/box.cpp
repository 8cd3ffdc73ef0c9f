#include "stokes/box.hpp"

#include <cmath>
#include <sstream>

namespace stokes {

BoxDomain::BoxDomain(std::vector<double> l, std::vector<double> h)
    : lo(std::move(l)), hi(std::move(h)) {
  if (lo.size() != hi.size())
    throw DimensionError("box corners have different dimensions");
  for (std::size_t j = 0; j < lo.size(); ++j) {
    if (!std::isfinite(lo[j]) || !std::isfinite(hi[j]))
      throw PreconditionError("box corners must be finite");
    if (lo[j] > hi[j])
      throw PreconditionError("box needs lo <= hi in coordinate " +
                              std::to_string(j));
  }
}

BoxDomain BoxDomain::unit(int dim) {
  return BoxDomain(std::vector<double>(static_cast<std::size_t>(dim), 0.0),
                   std::vector<double>(static_cast<std::size_t>(dim), 1.0));
}

BoxDomain deleteCoord(const BoxDomain& b, int i) {
  if (i < 0 || i >= b.dim())
    throw IndexError("cannot delete coordinate " + std::to_string(i) +
                     " of a " + std::to_string(b.dim()) + "-dimensional box");
  BoxDomain out = b;
  out.lo.erase(out.lo.begin() + i);
  out.hi.erase(out.hi.begin() + i);
  return out;
}

std::string toString(const BoxDomain& b) {
  std::ostringstream os;
  os.precision(17);
  os << "[";
  for (int j = 0; j < b.dim(); ++j) {
    if (j) os << " x ";
    os << "[" << b.lo[j] << ", " << b.hi[j] << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace stokes
