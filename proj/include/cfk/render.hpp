#pragma once

#include <map>
#include <string>
#include <vector>

#include "cfk/filtered_complex.hpp"
#include "cfk/homology.hpp"
#include "cfk/involutive.hpp"

namespace cfk {

/// Graphviz digraph with generators pinned at their (i,j) positions.
std::string to_dot(const FilteredComplex& c, const std::string& name = "cfk");

/// Box annotation for ASCII grids: the box with lower-left corner `corner`
/// drawn `count` times.
struct BoxMark {
  Plane corner;
  int count = 1;
};

/// Character grid: generators are 'o', U^0 arrows along rows and columns are
/// drawn with '-' and '|', and each box mark prints its count at the box
/// centre. j increases upwards.
std::string to_ascii(const FilteredComplex& c, const std::vector<BoxMark>& boxes = {});

/// One line per summand, e.g. "F(0)[U]  F(3)[U]/U^2".
std::string describe(const GradedModule& m);

/// Table listing of a subquotient or cone: label, grading, differential.
std::string describe_complex(const std::vector<std::string>& labels, const std::vector<int>& gradings,
                             const PolyMatrix& diff);

std::string describe_hfk(const HfkTable& t);
std::string describe_alexander(const AlexanderPoly& p);

}  // namespace cfk
