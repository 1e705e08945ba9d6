#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cfk/filtered_complex.hpp"
#include "cfk/matrix.hpp"

namespace cfk {

using Vector = std::vector<UPoly>;

struct FreeSummand {
  int grading = 0;
  Vector representative;
};

struct TorsionSummand {
  int grading = 0;
  int order_exp = 0;  // summand is F[U]/U^order_exp
  Vector representative;
};

struct GradedModule {
  std::vector<FreeSummand> free;
  std::vector<TorsionSummand> torsion;
};

/// Coordinates of a homology class in the summand basis. Torsion
/// coefficients are reduced modulo U^order_exp.
struct ClassCoordinates {
  std::vector<UPoly> free;
  std::vector<UPoly> torsion;
  bool is_zero() const;
};

/// Grading of a homogeneous vector; nullopt for the zero vector. Throws
/// StructuralError if the vector mixes gradings or has a non-monomial entry.
std::optional<int> homogeneous_grading(const std::vector<int>& gradings, const Vector& v);

/// Homology of a finitely generated free graded F2[U]-complex whose
/// differential lowers grading by one (U has degree -2).
class UHomology {
 public:
  UHomology(std::vector<int> gradings, PolyMatrix diff);

  const GradedModule& module() const noexcept { return module_; }
  const std::vector<int>& gradings() const noexcept { return gradings_; }
  const PolyMatrix& differential() const noexcept { return diff_; }
  std::size_t chain_rank() const noexcept { return gradings_.size(); }
  std::size_t summand_count() const { return module_.free.size() + module_.torsion.size(); }

  bool is_cycle(const Vector& v) const;
  /// Throws InvalidArgument if v is not a cycle.
  ClassCoordinates coordinates(const Vector& cycle) const;
  bool is_boundary(const Vector& cycle) const { return coordinates(cycle).is_zero(); }

 private:
  struct Piece {
    std::vector<std::size_t> members;  // chain indices of this parity
    PolyMatrix left;                   // SNF transform of the incoming differential
    std::vector<UPoly> incoming_diagonal;
    std::size_t incoming_rank = 0;
    PolyMatrix kernel_right_inverse;  // R2^-1 for the outgoing block
    std::size_t outgoing_rank = 0;
    std::vector<std::size_t> torsion_slots;  // (k, summand index)
    std::vector<std::size_t> torsion_index;
    std::vector<std::size_t> free_index;
  };

  std::vector<int> gradings_;
  PolyMatrix diff_;
  GradedModule module_;
  Piece pieces_[2];
};

UHomology homology_over_u(const SubquotientComplex& sq);

/// Matrix of the map induced on homology, in summand order (free summands
/// first, then torsion). f is a (target, source) chain map matrix.
PolyMatrix induced_map(const PolyMatrix& f, const UHomology& source, const UHomology& target);

/// Rank of the homology after inverting U (entries specialized at U = 1).
int localized_rank(const LaurentMatrix& diff);
int localized_rank(const PolyMatrix& diff);

int vertical_homology_rank(const FilteredComplex& c);
int horizontal_homology_rank(const FilteredComplex& c);

/// V0 = -gr/2 of the tower of H(A0-). Throws StructuralError if the tower
/// count is not one.
int v0(const FilteredComplex& c);

/// (Alexander w, Maslov k) -> rank.
using HfkTable = std::map<std::pair<int, int>, int>;
HfkTable hfk_hat(const FilteredComplex& c);

/// Laurent polynomial in t: exponent -> coefficient.
using AlexanderPoly = std::map<int, long long>;
AlexanderPoly alexander_poly(const HfkTable& hfk);
AlexanderPoly alexander_poly(const FilteredComplex& c);
/// Largest Alexander grading with nonzero HFK; throws on an empty table.
int genus(const HfkTable& hfk);
int genus_detect(const FilteredComplex& c);

}  // namespace cfk
