#include "cfk/examples.hpp"

#include "cfk/error.hpp"

namespace cfk::examples {

FilteredComplex right_trefoil() {
  return ComplexBuilder{}
      .add("a", -1, {0, 0})
      .add("b", -2, {-1, 0})
      .add("c", -2, {0, -1})
      .arrow("a", "b")
      .arrow("a", "c")
      .build();
}

FilteredComplex left_trefoil() { return dualize(right_trefoil()); }

FilteredComplex figure_eight() {
  return ComplexBuilder{}
      .add("a", 0, {0, 0})
      .add("b", -1, {-1, 0})
      .add("c", -1, {0, -1})
      .add("e", 0, {0, 0})
      .add("x", 0, {0, 0})
      .arrow("a", "b")
      .arrow("a", "c")
      .arrow("b", "e", 1)
      .arrow("c", "e", 1)
      .build();
}

FilteredComplex unknot() { return ComplexBuilder{}.add("x", 0, {0, 0}).build(); }

namespace {

LaurentMatrix trefoil_map(const FilteredComplex& c) {
  MapBuilder b(c);
  b.set("a", {{"a"}}).set("b", {{"c"}}).set("c", {{"b"}});
  return b.matrix();
}

}  // namespace

KnotExample right_trefoil_example() {
  auto c = right_trefoil();
  auto iota = make_involution(c, trefoil_map(c));
  return {"trefoil", std::move(c), std::move(iota)};
}

KnotExample left_trefoil_example() {
  auto c = left_trefoil();
  auto iota = make_involution(c, trefoil_map(c));
  return {"left-trefoil", std::move(c), std::move(iota)};
}

KnotExample figure_eight_example() {
  auto c = figure_eight();
  MapBuilder b(c);
  b.set("c", {{"b"}}).set("b", {{"c"}}).set("e", {{"e"}}).set("a", {{"a"}, {"x"}}).set("x", {{"x"}, {"e"}});
  auto iota = make_involution(c, b.matrix());
  return {"figure-eight", std::move(c), std::move(iota)};
}

KnotExample unknot_example() {
  auto c = unknot();
  auto iota = make_involution(c, LaurentMatrix::identity(1));
  return {"unknot", std::move(c), std::move(iota)};
}

KnotExample lspace_example(std::span<const int> exponents) {
  auto s = build_lspace_staircase(exponents);
  auto iota = standard_staircase_involution(s.complex);
  std::string name = "lspace";
  for (int w : exponents) name += " " + std::to_string(w);
  return {name, std::move(s.complex), std::move(iota)};
}

std::vector<std::string> names() { return {"trefoil", "left-trefoil", "figure-eight", "unknot"}; }

KnotExample by_name(std::string_view name) {
  if (name == "trefoil" || name == "right-trefoil") return right_trefoil_example();
  if (name == "left-trefoil") return left_trefoil_example();
  if (name == "figure-eight") return figure_eight_example();
  if (name == "unknot") return unknot_example();
  throw InvalidArgument("unknown example '" + std::string(name) + "'");
}

}  // namespace cfk::examples
