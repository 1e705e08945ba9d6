#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cfk/filtered_complex.hpp"
#include "cfk/involution.hpp"

namespace cfk::examples {

/// a at (0,0), b at (-1,0), c at (0,-1); d a = b + c.
FilteredComplex right_trefoil();
/// Dual of the right trefoil; d b = d c = a.
FilteredComplex left_trefoil();
/// Box a, b, c, e plus an isolated x, all anchored at the origin.
FilteredComplex figure_eight();
/// One generator at (0,0) in grading 0.
FilteredComplex unknot();

struct KnotExample {
  std::string name;
  FilteredComplex complex;
  Involution iota;
};

KnotExample right_trefoil_example();
KnotExample left_trefoil_example();
KnotExample figure_eight_example();
KnotExample unknot_example();
/// L-space knot from its Alexander exponents, with the reflection map.
KnotExample lspace_example(std::span<const int> exponents);

/// trefoil, left-trefoil, figure-eight, unknot.
std::vector<std::string> names();
/// Throws InvalidArgument for an unknown name.
KnotExample by_name(std::string_view name);

}  // namespace cfk::examples
