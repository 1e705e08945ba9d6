#pragma once

#include <string>
#include <vector>

#include "cfk/filtered_complex.hpp"
#include "cfk/homology.hpp"
#include "cfk/involution.hpp"

namespace cfk {

/// AI0- = Cone(A0- --Q(1+iota)--> Q A0-)[-1] with basis x_0..x_{n-1}, then
/// Qx_0..Qx_{n-1}.
struct ConeComplex {
  SubquotientComplex base;
  std::vector<int> gradings;
  std::vector<std::string> labels;
  PolyMatrix diff;  // (target, source)
  PolyMatrix q;     // the Q action x -> Qx, Qx -> 0

  std::size_t size() const noexcept { return gradings.size(); }
};

/// iota_a0 is the involution restricted to A0- (see restrict_map).
ConeComplex build_cone(const SubquotientComplex& a0, const PolyMatrix& iota_a0);
/// Restricts iota to A0- of c and builds the cone.
ConeComplex build_cone(const FilteredComplex& c, const Involution& iota);

struct InvolutiveResult {
  int v0_lower = 0;  // underline V0
  int v0_upper = 0;  // overline V0
  int lower_grading = 0;   // tower grading of H / sat(Im Q)
  int upper_grading = 0;   // tower grading of sat(Im Q)
  std::vector<int> tower_gradings;
  GradedModule homology;
};

/// Reads the two invariants off the towers of H(AI0-) and the saturation of
/// the image of Q. Throws StructuralError unless there are exactly two towers
/// and Q has rank one on them.
InvolutiveResult involutive_vs(const ConeComplex& cone);

}  // namespace cfk
