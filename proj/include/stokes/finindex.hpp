#pragma once

// Index bookkeeping for cubical faces. Integer arithmetic only.

#include <utility>

#include "stokes/box.hpp"

namespace stokes {

/// k-th element of {0, 1, ...} \ {i} in increasing order.
constexpr int succAbove(int i, int k) noexcept { return k < i ? k : k + 1; }

/// Collapses slot j relative to a removed slot i: i-1 if j < i, else i.
/// This is the convention under which faceOfFaceBox and signCancel hold.
constexpr int predAbove(int j, int i) noexcept { return j < i ? i - 1 : i; }

/// (-1)^e for a nonnegative exponent.
constexpr int negOnePow(int e) noexcept { return (e % 2 == 0) ? 1 : -1; }

/// (-1)^(i+eps) (-1)^(j+eta)
///   + (-1)^(succAbove(i,j)+eta) (-1)^(predAbove(j,i)+eps).
/// Identically zero on the whole index range.
constexpr int signCancel(int i, int j, int eps, int eta) noexcept {
  return negOnePow(i + eps) * negOnePow(j + eta) +
         negOnePow(succAbove(i, j) + eta) * negOnePow(predAbove(j, i) + eps);
}

/// succAbove(i,j) + predAbove(j,i) and i + j have different parity.
constexpr bool parityFlips(int i, int j) noexcept {
  return (succAbove(i, j) + predAbove(j, i)) % 2 != (i + j) % 2;
}

/// The two routes to a codimension-2 face of `b`:
///   first  = face j of (face i of b)
///   second = face predAbove(j,i) of (face succAbove(i,j) of b).
/// Requires b.dim() >= 2, i < b.dim(), j < b.dim() - 1.
std::pair<BoxDomain, BoxDomain> faceOfFaceBox(const BoxDomain& b, int i,
                                              int j);

struct ExhaustiveSummary {
  int maxI = 0;
  int maxJ = 0;
  long tuplesChecked = 0;
  long failures = 0;
};

/// signCancel == 0 and parityFlips for 0 <= i <= maxI, 0 <= j <= maxJ and
/// all four orientation pairs.
ExhaustiveSummary checkSignCancellation(int maxI, int maxJ);

/// faceOfFaceBox route equality for every index pair of a box of each
/// dimension in [minDim, maxDim]; corners are distinct per coordinate so
/// any mismatch is visible.
ExhaustiveSummary checkFaceOfFace(int minDim, int maxDim);

}  // namespace stokes
