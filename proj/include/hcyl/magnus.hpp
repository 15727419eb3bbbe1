#pragma once

#include "hcyl/intmatrix.hpp"
#include "hcyl/matrix.hpp"

namespace hcyl {

/// r together with the action sigma on H it is twisted by.
struct MagnusMatrix {
  FracMatrix r;
  IntMatrix sigma;

  RationalFunction det() const { return determinant(r); }
};

/// The crossed product (r1 * ^{sigma1} r2, sigma1 * sigma2).
MagnusMatrix crossed_product(const MagnusMatrix& a, const MagnusMatrix& b);

}  // namespace hcyl
