#include "cfk/involutive.hpp"

#include <algorithm>

#include "cfk/error.hpp"

namespace cfk {

ConeComplex build_cone(const SubquotientComplex& a0, const PolyMatrix& iota_a0) {
  const std::size_t n = a0.basis.size();
  if (iota_a0.rows() != n || iota_a0.cols() != n) throw InvalidArgument("involution does not match A0-");
  ConeComplex cone;
  cone.base = a0;
  cone.gradings.resize(2 * n);
  cone.labels.resize(2 * n);
  cone.diff = PolyMatrix(2 * n, 2 * n);
  cone.q = PolyMatrix(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    cone.gradings[k] = a0.gradings[k] + 1;
    cone.gradings[n + k] = a0.gradings[k];
    cone.labels[k] = a0.labels[k];
    cone.labels[n + k] = "Q" + a0.labels[k];
    cone.q(n + k, k) = UPoly::one();
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      cone.diff(r, c) = a0.diff(r, c);
      cone.diff(n + r, n + c) = a0.diff(r, c);
      cone.diff(n + r, c) = iota_a0(r, c) + (r == c ? UPoly::one() : UPoly{});
    }
  }
  return cone;
}

ConeComplex build_cone(const FilteredComplex& c, const Involution& iota) {
  const auto a0 = subquotient(c, Region::a0_minus());
  return build_cone(a0, restrict_map(iota.map.matrix, a0, a0));
}

InvolutiveResult involutive_vs(const ConeComplex& cone) {
  const UHomology h(cone.gradings, cone.diff);
  const auto& free = h.module().free;
  if (free.size() != 2) {
    throw StructuralError("H(AI0-) has " + std::to_string(free.size()) + " towers, expected 2");
  }
  const auto qhat = induced_map(cone.q, h, h);

  // Q restricted to H / torsion: the 2x2 free block.
  std::optional<std::size_t> column;
  int nonzero_columns = 0;
  for (std::size_t c = 0; c < 2; ++c) {
    if (!qhat(0, c).is_zero() || !qhat(1, c).is_zero()) {
      ++nonzero_columns;
      if (!column) column = c;
    }
  }
  if (!column) throw StructuralError("Q vanishes on the towers of H(AI0-)");

  // Primitive generator of the saturation of Im Q: divide the column by its
  // largest U-power factor.
  int shift = -1;
  for (std::size_t r = 0; r < 2; ++r) {
    const auto& x = qhat(r, *column);
    if (x.is_zero()) continue;
    if (!x.is_monomial()) throw StructuralError("Q has a non-homogeneous coordinate");
    shift = shift < 0 ? x.degree() : std::min(shift, x.degree());
  }
  std::optional<int> upper;
  for (std::size_t r = 0; r < 2; ++r) {
    const auto& x = qhat(r, *column);
    if (x.is_zero()) continue;
    const int g = free[r].grading - 2 * (x.degree() - shift);
    if (upper && *upper != g) throw StructuralError("Q image is not homogeneous");
    upper = g;
  }
  // Rank one check: the other column must be proportional.
  if (nonzero_columns == 2) {
    const auto det = qhat(0, 0) * qhat(1, 1) + qhat(0, 1) * qhat(1, 0);
    if (!det.is_zero()) throw StructuralError("Q has rank two on the towers");
  }

  const int lower = free[0].grading + free[1].grading - *upper;
  if (lower % 2 == 0 || *upper % 2 != 0) throw StructuralError("tower gradings have unexpected parity");

  InvolutiveResult out;
  out.lower_grading = lower;
  out.upper_grading = *upper;
  out.v0_lower = -(lower - 1) / 2;
  out.v0_upper = -*upper / 2;
  for (const auto& f : free) out.tower_gradings.push_back(f.grading);
  out.homology = h.module();
  return out;
}

}  // namespace cfk
