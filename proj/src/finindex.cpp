#include "stokes/finindex.hpp"

#include <string>

namespace stokes {

std::pair<BoxDomain, BoxDomain> faceOfFaceBox(const BoxDomain& b, int i,
                                              int j) {
  const int d = b.dim();
  if (d < 2) throw DimensionError("face of face needs a box of dimension >= 2");
  if (i < 0 || i >= d || j < 0 || j >= d - 1)
    throw IndexError("face-of-face indices (" + std::to_string(i) + ", " +
                     std::to_string(j) + ") out of range for dimension " +
                     std::to_string(d));
  BoxDomain first = deleteCoord(deleteCoord(b, i), j);
  BoxDomain second = deleteCoord(deleteCoord(b, succAbove(i, j)), predAbove(j, i));
  return {std::move(first), std::move(second)};
}

ExhaustiveSummary checkSignCancellation(int maxI, int maxJ) {
  ExhaustiveSummary s{maxI, maxJ, 0, 0};
  for (int i = 0; i <= maxI; ++i)
    for (int j = 0; j <= maxJ; ++j)
      for (int eps = 0; eps <= 1; ++eps)
        for (int eta = 0; eta <= 1; ++eta) {
          ++s.tuplesChecked;
          if (signCancel(i, j, eps, eta) != 0 || !parityFlips(i, j))
            ++s.failures;
        }
  return s;
}

ExhaustiveSummary checkFaceOfFace(int minDim, int maxDim) {
  ExhaustiveSummary s{maxDim - 1, maxDim - 2, 0, 0};
  for (int d = minDim; d <= maxDim; ++d) {
    std::vector<double> lo;
    std::vector<double> hi;
    for (int k = 0; k < d; ++k) {
      lo.push_back(static_cast<double>(10 * k));
      hi.push_back(static_cast<double>(10 * k + 1 + k));
    }
    const BoxDomain b(lo, hi);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d - 1; ++j) {
        ++s.tuplesChecked;
        const auto [first, second] = faceOfFaceBox(b, i, j);
        if (first != second) ++s.failures;
      }
  }
  return s;
}

}  // namespace stokes
