#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cfk/filtered_complex.hpp"

namespace cfk {

struct Term {
  std::string id;
  int upower = 0;
};

/// Assembles a map C -> C generator by generator. Generators that are never
/// set map to zero; setting a generator twice replaces the earlier image.
class MapBuilder {
 public:
  explicit MapBuilder(const FilteredComplex& c) : c_(&c), m_(c.size(), c.size()) {}

  MapBuilder& set(std::string_view source, const std::vector<Term>& image);
  const LaurentMatrix& matrix() const noexcept { return m_; }

 private:
  const FilteredComplex* c_;
  LaurentMatrix m_;
};

/// Skew-filtered grading-preserving chain map together with the Sarkar map it
/// squares to.
struct Involution {
  ChainMap map;
  ChainMap sigma;
};

Involution make_involution(const FilteredComplex& c, LaurentMatrix m);

/// z0 -> z0 and z<r>^1 <-> z<r>^2 for every staircase generator present.
void add_staircase_reflection(MapBuilder& b, const FilteredComplex& c);

/// Standard square map between the boxes with suffixes s and t (corners
/// transposed to each other).
void add_square_pair(MapBuilder& b, const FilteredComplex& c, std::string_view s, std::string_view t);

/// The map on a staircase plus one main-diagonal box with suffix s:
/// a -> a + z0, b -> c + z1^2, c -> b + z1^1, z0 -> z0 + e, e -> e.
void add_c1_box(MapBuilder& b, std::string_view s);

/// Reflection on a staircase complex; throws InvalidArgument if some
/// generator is not a staircase generator.
Involution standard_staircase_involution(const FilteredComplex& c);

/// Standard square map on a complex that is exactly two boxes.
Involution standard_square_pair_map(const FilteredComplex& c, std::string_view s, std::string_view t);

/// The involution on the dual complex (transpose).
Involution dual_involution(const FilteredComplex& dual, const Involution& iota);

/// Chain map, skew filtration, Maslov preservation and iota^2 = sigma. With
/// exact_slots, every entry U^a y of iota(x) must also satisfy
/// plane(U^a y) = transposed plane(x).
std::vector<Violation> validate_involution(const FilteredComplex& c, const Involution& iota, bool exact_slots = false);

}  // namespace cfk
