#pragma once

#include <map>
#include <string>
#include <vector>

#include "cfk/filtered_complex.hpp"
#include "cfk/homology.hpp"
#include "cfk/involution.hpp"
#include "cfk/involutive.hpp"

namespace cfk::pretzel {

/// P(-2, m, n) with m >= n >= 3 both odd.
struct Params {
  int m = 3;
  int n = 3;

  /// Throws InvalidArgument unless m, n are odd with m >= n >= 3.
  static Params make(int m, int n);

  int genus() const { return (m + n) / 2; }
  int m_prime() const { return (m - 3) / 2; }
  int n_prime() const { return (n - 3) / 2; }
  int gamma() const;
  int delta() const;
  bool congruent() const { return (m - n) % 4 == 0; }
};

enum class Family { C1, C2, C3, C4 };
std::string to_string(Family f);

struct ModelSpec {
  Family family = Family::C1;
  int v = 0;  // steps in the top half of the staircase
  int u = 0;  // v - 2
  int n_of_k = 0;
  int main_diag_boxes = 0;  // boxes on the main diagonal of the model complex
  std::vector<int> steps;   // listed from z_v inward
  std::map<int, int> boxes; // diagonal s -> multiplicity in the full complex
};

ModelSpec classify(const Params& p);

/// Multiplicities solved from the knot Floer ranks, top diagonal first.
/// Throws StructuralError if the ranks admit no nonnegative solution.
std::map<int, int> box_multiplicities(const Params& p);
/// Closed-form multiplicities.
std::map<int, int> box_multiplicities_closed_form(const Params& p);

struct Complex {
  FilteredComplex complex;
  Involution iota;
};

/// Staircase plus every box, with the involution pairing boxes across the
/// diagonal. mirrored dualizes both.
Complex full_complex(const Params& p, bool mirrored = false);
/// Staircase plus the unpaired main-diagonal box (family C1 only).
Complex model_complex(const Params& p, bool mirrored = false);

/// The staircase summand alone.
FilteredComplex staircase(const Params& p, bool mirrored = false);

/// Lower-left corners of the boxes of the full complex with their
/// multiplicities, ordered by diagonal.
std::vector<std::pair<Plane, int>> box_corners(const ModelSpec& spec, bool mirrored = false);

/// Staircase with steps (1, 2, 1, ..., 1) of length 2 n(K) plus one
/// main-diagonal box; for n(K) >= 2 this is the C1 model of any P(-2,m,n)
/// with m + n = 4 n(K) + 2.
Complex c1_complex(int n_of_k, bool mirrored = false);

enum class LedgerReading { literal, corrected };

struct LedgerEntry {
  std::string label;
  Plane plane;
  bool exceptional = false;
};

/// Generator list of the pretzel complex with the i-offset set to zero.
/// The corrected reading changes the j-coordinate of x_{2p,2q+1} to
/// delta - m' - p + q.
std::vector<LedgerEntry> gmm_ledger(const Params& p, LedgerReading reading = LedgerReading::corrected);

/// Knot Floer ranks, extended to negative Alexander gradings by
/// rank(w, k) = rank(-w, k - 2w).
HfkTable expected_hfk(const Params& p, bool mirrored = false);
AlexanderPoly expected_alexander(const Params& p);

struct Triple {
  int v0 = 0;
  int v0_lower = 0;
  int v0_upper = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

Triple theorem_values(const Params& p, bool mirrored);

struct Report {
  Params params;
  bool mirrored = false;
  bool full = false;
  ModelSpec spec;
  Triple computed;
  Triple expected;
  GradedModule a0_homology;
  InvolutiveResult cone;
  std::size_t generators = 0;

  bool theorem_match() const { return computed == expected; }
};

/// Cross-checks on the full complex of K (or its mirror).
struct Checks {
  bool theorem_match = false;
  bool hfk_match = false;
  bool alexander_match = false;
  bool genus_match = false;
  bool count_match = false;
  bool structure_ok = false;  // validate + involution laws on full and model complexes

  bool all() const {
    return theorem_match && hfk_match && alexander_match && genus_match && count_match && structure_ok;
  }
  friend bool operator==(const Checks&, const Checks&) = default;
};

Checks run_checks(const Report& r);

/// Runs model (or full) complex -> involution -> A0- -> V0 -> cone -> V's.
Report compute_invariants(const Params& p, bool mirrored, bool use_full = false);

}  // namespace cfk::pretzel
