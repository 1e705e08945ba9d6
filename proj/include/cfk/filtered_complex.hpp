#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cfk/matrix.hpp"

namespace cfk {

/// Filtration level (i, j) of a generator's U^0 representative. The
/// Alexander grading is j.
struct Plane {
  int i = 0;
  int j = 0;

  Plane translated(int upower) const { return {i - upower, j - upower}; }
  Plane transposed() const { return {j, i}; }
  friend bool operator==(const Plane&, const Plane&) = default;
  friend auto operator<=>(const Plane&, const Plane&) = default;
};

/// Componentwise order on filtration levels.
inline bool filtration_le(const Plane& a, const Plane& b) { return a.i <= b.i && a.j <= b.j; }

struct Generator {
  std::string id;
  int maslov = 0;
  Plane plane;
};

/// Finitely generated free F2[U,U^-1]-complex with a Z+Z filtration. The
/// differential is stored as a (target, source) matrix whose nonzero entries
/// are U-powers.
class FilteredComplex {
 public:
  FilteredComplex() = default;
  FilteredComplex(std::vector<Generator> gens, LaurentMatrix diff);

  std::size_t size() const noexcept { return gens_.size(); }
  const std::vector<Generator>& generators() const noexcept { return gens_; }
  const Generator& generator(std::size_t k) const { return gens_.at(k); }
  const LaurentMatrix& differential() const noexcept { return diff_; }

  std::optional<std::size_t> find(std::string_view id) const;
  /// Throws InvalidArgument for an unknown id.
  std::size_t index_of(std::string_view id) const;

 private:
  std::vector<Generator> gens_;
  LaurentMatrix diff_;
  std::unordered_map<std::string, std::size_t> index_;
};

class ComplexBuilder {
 public:
  ComplexBuilder& add(std::string id, int maslov, Plane plane);
  /// Adds U^upower * target to the differential of source.
  ComplexBuilder& arrow(std::string_view source, std::string_view target, int upower = 0);
  FilteredComplex build() const;

 private:
  struct Arrow {
    std::string source, target;
    int upower;
  };
  std::vector<Generator> gens_;
  std::vector<Arrow> arrows_;
};

struct Violation {
  std::string rule;
  std::string detail;
};

/// Checks d^2 = 0, the Maslov law and the filtration law entry by entry.
std::vector<Violation> validate(const FilteredComplex& c);
/// Throws InvalidArgument listing the first violations.
void require_valid(const FilteredComplex& c, std::string_view context);

enum class FiltrationKind { filtered, skew_filtered };

/// A map between filtered complexes given by its (target, source) matrix.
struct ChainMap {
  LaurentMatrix matrix;
  FiltrationKind kind = FiltrationKind::filtered;
  int maslov_shift = 0;
};

/// Chain-map identity, homogeneity of the stated shift and (skew-)filtration.
std::vector<Violation> validate_map(const FilteredComplex& source, const FilteredComplex& target,
                                    const ChainMap& f, bool require_chain_map = true);

// --- builders ---------------------------------------------------------------

enum class StaircaseSign { positive, negative };

/// Staircase with generators z0, z<r>^1, z<r>^2 for r = 1..v, where v is the
/// number of steps. Steps are listed from z_v inward; z0 sits at (0,0) and
/// the z^1 branch is the one above the diagonal. Gradings are normalized so
/// the vertical homology sits in grading 0.
FilteredComplex build_staircase(StaircaseSign sign, std::span<const int> steps);

/// n(K) of a staircase with the given steps (sum of odd-position steps).
int staircase_n(std::span<const int> steps);

/// One-by-one box with lower-left corner (i,j): a at (i+1,j+1), b at (i,j+1),
/// c at (i+1,j), e with U e at (i,j). Ids carry the given suffix.
FilteredComplex build_box(Plane corner, int bottom_maslov, std::string_view suffix = "");
/// Thin box: U e has Maslov grading i + j.
FilteredComplex build_box(Plane corner, std::string_view suffix = "");

struct LSpaceStaircase {
  FilteredComplex complex;
  int n_of_k = 0;
};

/// Positive staircase from the exponents 0 < w_1 < ... < w_v of the
/// Alexander polynomial.
LSpaceStaircase build_lspace_staircase(std::span<const int> exponents);

FilteredComplex dualize(const FilteredComplex& c);
/// Block sum; throws InvalidArgument on a repeated id.
FilteredComplex direct_sum(std::span<const FilteredComplex> parts);
FilteredComplex shift_maslov(const FilteredComplex& c, int delta);
/// Shifts gradings so the homology of C{i=0} is supported in grading 0.
/// Throws StructuralError if that homology does not have rank one.
FilteredComplex normalize_maslov(const FilteredComplex& c);

// --- directional pieces and the Sarkar map -----------------------------------

/// i-drop and j-drop of the entry U^a y in d(x).
struct Drop {
  int i = 0;
  int j = 0;
};
Drop entry_drop(const FilteredComplex& c, std::size_t target, std::size_t source, int upower);

enum class Direction { vertical, horizontal };

/// Components of d with i-drop 0 (vertical) or j-drop 0 (horizontal).
ChainMap directional_diff(const FilteredComplex& c, Direction dir);

struct PhiPsi {
  ChainMap phi;  // odd i-drop
  ChainMap psi;  // odd j-drop
};
PhiPsi phi_psi(const FilteredComplex& c);

/// sigma = Id + U^-1 Phi Psi.
ChainMap sarkar(const FilteredComplex& c);

// --- subquotients ---------------------------------------------------------------

enum class RegionKind { a0_minus, b0_minus, i_equals_0, i0_j_w };

struct Region {
  RegionKind kind = RegionKind::a0_minus;
  int w = 0;

  static Region a0_minus() { return {RegionKind::a0_minus, 0}; }
  static Region b0_minus() { return {RegionKind::b0_minus, 0}; }
  static Region i_equals_0() { return {RegionKind::i_equals_0, 0}; }
  static Region i0_j_w(int w) { return {RegionKind::i0_j_w, w}; }
};

/// Basis element U^upower * generator of the parent complex.
struct BasisElement {
  std::size_t generator = 0;
  int upower = 0;
};

/// Restriction of a filtered complex to a region. For A0- and B0- this is a
/// free F2[U]-complex; the slices i = 0 and (i = 0, j = w) are F2-complexes
/// whose matrices have constant entries.
struct SubquotientComplex {
  Region region;
  std::vector<BasisElement> basis;
  std::vector<int> gradings;
  std::vector<std::string> labels;
  PolyMatrix diff;  // (target, source)
};

SubquotientComplex subquotient(const FilteredComplex& c, Region region);

/// Matrix of f between two F2[U] subquotients (A0- or B0-) of the complexes
/// f is defined on. Throws InvalidArgument if f leaves the target region.
PolyMatrix restrict_map(const LaurentMatrix& f, const SubquotientComplex& source,
                        const SubquotientComplex& target);

/// Graded F2 complex of a slice subquotient.
struct F2Slice {
  std::vector<int> gradings;
  std::vector<std::pair<std::size_t, std::size_t>> entries;
};
F2Slice to_f2(const SubquotientComplex& sq);

std::string basis_label(const FilteredComplex& c, const BasisElement& b);

}  // namespace cfk
