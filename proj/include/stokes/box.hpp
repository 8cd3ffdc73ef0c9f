#pragma once

#include <compare>
#include <string>
#include <vector>

#include "stokes/errors.hpp"

namespace stokes {

/// Axis-aligned box [lo, hi] in R^dim with lo <= hi componentwise.
/// A zero-dimensional box is a single point of measure one.
struct BoxDomain {
  std::vector<double> lo;
  std::vector<double> hi;

  BoxDomain() = default;
  BoxDomain(std::vector<double> lo, std::vector<double> hi);

  static BoxDomain unit(int dim);

  int dim() const noexcept { return static_cast<int>(lo.size()); }

  /// Exact componentwise comparison; boxes come from input, not arithmetic.
  friend auto operator<=>(const BoxDomain&, const BoxDomain&) = default;
  friend bool operator==(const BoxDomain&, const BoxDomain&) = default;
};

/// The box with coordinate i removed.
BoxDomain deleteCoord(const BoxDomain& b, int i);

std::string toString(const BoxDomain& b);

}  // namespace stokes
