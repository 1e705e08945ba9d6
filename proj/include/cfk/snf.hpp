#pragma once

#include <cstddef>
#include <vector>

#include "cfk/matrix.hpp"

namespace cfk {

/// Smith normal form over the PID F2[U]: left * M * right = diag(diagonal).
/// The inverses are tracked alongside so callers can move between the old and
/// new bases without a separate inversion.
struct SnfResult {
  std::vector<UPoly> diagonal;  // length min(rows, cols); zeros trail
  PolyMatrix left;              // rows x rows
  PolyMatrix right;             // cols x cols
  PolyMatrix left_inverse;
  PolyMatrix right_inverse;

  std::size_t rank() const;
};

/// Pivots on the nonzero entry of least degree, ties broken by the lowest
/// (row, col). On graded input (every entry a monomial whose exponent is
/// fixed by row and column degrees) every intermediate entry stays a monomial,
/// so the transforms are homogeneous.
SnfResult snf(const PolyMatrix& m);

}  // namespace cfk
