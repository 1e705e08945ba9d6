#include <algorithm>

#include "cfk/error.hpp"
#include "cfk/examples.hpp"
#include "cfk/involutive.hpp"
#include "cfk/pretzel.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cfk;

namespace {

struct Vs {
  int v0 = 0;
  int lower = 0;
  int upper = 0;
  friend bool operator==(const Vs&, const Vs&) = default;
};

Vs invariants(const FilteredComplex& c, const Involution& iota) {
  const auto r = involutive_vs(build_cone(c, iota));
  return {v0(c), r.v0_lower, r.v0_upper};
}

std::size_t label_index(const ConeComplex& cone, const std::string& label) {
  const auto it = std::find(cone.labels.begin(), cone.labels.end(), label);
  REQUIRE(it != cone.labels.end());
  return static_cast<std::size_t>(it - cone.labels.begin());
}

oracle::UComplex as_oracle(const ConeComplex& cone) { return {cone.gradings, cone.diff, cone.q}; }

std::vector<std::pair<int, int>> torsion_of(const GradedModule& m) {
  std::vector<std::pair<int, int>> out;
  for (const auto& t : m.torsion) out.emplace_back(t.grading, t.order_exp);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> towers_of(const GradedModule& m) {
  std::vector<int> out;
  for (const auto& f : m.free) out.push_back(f.grading);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("trefoil cone") {
  const auto ex = examples::right_trefoil_example();
  const auto cone = build_cone(ex.complex, ex.iota);
  CHECK(cone.size() == 6);
  CHECK((cone.diff * cone.diff).is_zero());
  CHECK((cone.q * cone.diff + cone.diff * cone.q).is_zero());
  const UHomology h(cone.gradings, cone.diff);
  Vector v(cone.size());
  v[label_index(cone, "b")] = UPoly::one();
  v[label_index(cone, "Qa")] = UPoly::one();
  CHECK(h.is_cycle(v));
  CHECK_FALSE(h.is_boundary(v));
  CHECK(homogeneous_grading(cone.gradings, v) == -1);
  CHECK(invariants(ex.complex, ex.iota) == Vs{1, 1, 1});
}

TEST_CASE("unknot cone is two towers in gradings 1 and 0") {
  const auto ex = examples::unknot_example();
  const auto cone = build_cone(ex.complex, ex.iota);
  CHECK(cone.size() == 2);
  CHECK(cone.gradings == std::vector<int>{1, 0});
  const auto r = involutive_vs(cone);
  CHECK(r.tower_gradings == std::vector<int>{1, 0});
  CHECK(r.homology.torsion.empty());
  CHECK(invariants(ex.complex, ex.iota) == Vs{0, 0, 0});
}

TEST_CASE("worked examples") {
  CHECK(invariants(examples::left_trefoil(), examples::left_trefoil_example().iota) == Vs{0, 0, -1});
  const auto f8 = examples::figure_eight_example();
  CHECK(invariants(f8.complex, f8.iota) == Vs{0, 1, 0});
}

TEST_CASE("L-space staircases have all three invariants equal") {
  // Positive Alexander exponents of T(2,3), T(2,5), T(3,4), T(2,7), T(3,5).
  const std::vector<std::vector<int>> cases = {{1}, {1, 2}, {1, 3}, {1, 2, 3}, {1, 3, 4}};
  for (const auto& w : cases) {
    const auto ex = examples::lspace_example(w);
    const auto vs = invariants(ex.complex, ex.iota);
    CHECK(vs.v0 == vs.lower);
    CHECK(vs.v0 == vs.upper);
  }
  const int one[] = {1};
  CHECK(invariants(examples::lspace_example(one).complex, examples::lspace_example(one).iota) == Vs{1, 1, 1});
}

TEST_CASE("C1 and dual C1 homology and invariants") {
  for (int n = 1; n <= 5; ++n) {
    INFO("n(K) = " << n);
    const auto k = pretzel::c1_complex(n);
    const auto a0 = subquotient(k.complex, Region::a0_minus());
    const auto ha = homology_over_u(a0).module();
    CHECK(towers_of(ha) == std::vector<int>{0});
    CHECK(torsion_of(ha) == std::vector<std::pair<int, int>>{{2 * n - 1, n}, {2 * n, 1}});
    const auto r = involutive_vs(build_cone(k.complex, k.iota));
    CHECK(towers_of(r.homology) == std::vector<int>{1, 2 * n});
    CHECK(torsion_of(r.homology) == std::vector<std::pair<int, int>>{{2 * n, 1}, {2 * n + 1, n + 1}});
    CHECK(invariants(k.complex, k.iota) == Vs{0, 0, -n});

    const auto d = pretzel::c1_complex(n, true);
    const auto da0 = subquotient(d.complex, Region::a0_minus());
    const auto hd = homology_over_u(da0).module();
    CHECK(towers_of(hd) == std::vector<int>{-2 * n});
    CHECK(torsion_of(hd) == std::vector<std::pair<int, int>>{{-2 * n, 1}});
    const auto dr = involutive_vs(build_cone(d.complex, d.iota));
    CHECK(towers_of(dr.homology) == std::vector<int>{-2 * n - 1, -2 * n});
    CHECK(torsion_of(dr.homology) == std::vector<std::pair<int, int>>{{-2 * n + 1, 1}});
    CHECK(invariants(d.complex, d.iota) == Vs{n, n + 1, n});
  }
}

TEST_CASE("cone homology agrees with F2 ranks per grading") {
  // Pins the torsion gradings of the C1 cones independently of the SNF code.
  for (int n = 1; n <= 5; ++n) {
    for (bool mirrored : {false, true}) {
      const auto k = pretzel::c1_complex(n, mirrored);
      const auto cone = build_cone(k.complex, k.iota);
      const auto h = UHomology(cone.gradings, cone.diff).module();
      const auto o = as_oracle(cone);
      INFO("n(K) = " << n << (mirrored ? " dual" : ""));
      for (int r = o.top(); r >= o.top() - 4 * n - 8; --r) {
        const int f2_rank = static_cast<int>(o.cycles(r).size()) - static_cast<int>(o.boundaries(r).rank());
        int expected = 0;
        for (const auto& f : h.free) expected += (f.grading >= r && (f.grading - r) % 2 == 0) ? 1 : 0;
        for (const auto& t : h.torsion) {
          const int gap = t.grading - r;
          expected += (gap >= 0 && gap % 2 == 0 && gap / 2 < t.order_exp) ? 1 : 0;
        }
        CHECK(f2_rank == expected);
      }
    }
  }
}

TEST_CASE("inequality V0_lower >= V0 >= V0_upper on every constructed complex") {
  for (int m = 3; m <= 13; m += 2) {
    for (int n = 3; n <= m; n += 2) {
      for (bool mirrored : {false, true}) {
        const auto r = pretzel::compute_invariants(pretzel::Params::make(m, n), mirrored);
        CHECK(r.computed.v0_lower >= r.computed.v0);
        CHECK(r.computed.v0 >= r.computed.v0_upper);
      }
    }
  }
}

TEST_CASE("cone structure: Q is a degree -1 chain map with Q^2 = 0") {
  const auto k = pretzel::model_complex(pretzel::Params::make(9, 5));
  const auto cone = build_cone(k.complex, k.iota);
  CHECK((cone.diff * cone.diff).is_zero());
  CHECK((cone.q * cone.q).is_zero());
  CHECK((cone.q * cone.diff + cone.diff * cone.q).is_zero());
  for (std::size_t s = 0; s < cone.size(); ++s) {
    for (std::size_t t = 0; t < cone.size(); ++t) {
      if (cone.q(t, s).is_zero()) continue;
      CHECK(cone.gradings[t] - 2 * cone.q(t, s).degree() == cone.gradings[s] - 1);
    }
  }
  CHECK(localized_rank(cone.diff) == 2);
}

TEST_CASE("splitting off a mirrored box pair leaves the invariants unchanged") {
  std::vector<pretzel::Complex> bases = {pretzel::c1_complex(2), pretzel::c1_complex(3, true)};
  const auto tref = examples::right_trefoil_example();
  bases.push_back({tref.complex, tref.iota});
  const auto f8 = examples::figure_eight_example();
  bases.push_back({f8.complex, f8.iota});
  for (const Plane corner : {Plane{-1, -1}, Plane{-1, 1}, Plane{-1, 3}}) {
    for (const auto& base : bases) {
      const int shift = base.complex.generator(0).maslov - base.complex.generator(0).plane.i -
                        base.complex.generator(0).plane.j;
      const FilteredComplex parts[] = {base.complex,
                                       build_box(corner, corner.i + corner.j + shift, "_p"),
                                       build_box(corner.transposed(), corner.i + corner.j + shift, "_q")};
      const auto sum = direct_sum(parts);
      auto m = LaurentMatrix(sum.size(), sum.size());
      for (std::size_t x = 0; x < base.complex.size(); ++x) {
        for (std::size_t y = 0; y < base.complex.size(); ++y) m(y, x) = base.iota.map.matrix(y, x);
      }
      MapBuilder b(sum);
      add_square_pair(b, sum, "_p", "_q");
      m += b.matrix();
      const auto iota = make_involution(sum, m);
      REQUIRE(validate(sum).empty());
      REQUIRE(validate_involution(sum, iota).empty());
      CHECK(invariants(sum, iota) == invariants(base.complex, base.iota));
    }
  }
}

TEST_CASE("saturation extractor agrees with the downward grading search") {
  std::vector<std::pair<std::string, pretzel::Complex>> cases;
  for (const auto& name : examples::names()) {
    const auto ex = examples::by_name(name);
    cases.emplace_back(name, pretzel::Complex{ex.complex, ex.iota});
  }
  for (int n = 1; n <= 5; ++n) {
    cases.emplace_back("C1 " + std::to_string(n), pretzel::c1_complex(n));
    cases.emplace_back("dual C1 " + std::to_string(n), pretzel::c1_complex(n, true));
  }
  for (int m = 3; m <= 21; m += 2) {
    for (int n = 3; n <= m; n += 2) {
      const auto p = pretzel::Params::make(m, n);
      for (bool mirrored : {false, true}) {
        const auto tag = std::to_string(m) + "," + std::to_string(n) + (mirrored ? " mirror" : "");
        cases.emplace_back("model " + tag, pretzel::model_complex(p, mirrored));
        cases.emplace_back("full " + tag, pretzel::full_complex(p, mirrored));
      }
    }
  }
  int compared = 0;
  for (const auto& [name, k] : cases) {
    const auto cone = build_cone(k.complex, k.iota);
    if (cone.size() > 60) continue;
    INFO(name);
    const auto r = involutive_vs(cone);
    const auto brute = oracle::brute_force_vs(as_oracle(cone));
    REQUIRE(brute);
    CHECK(brute->v0_lower == r.v0_lower);
    CHECK(brute->v0_upper == r.v0_upper);
    ++compared;
  }
  MESSAGE("compared " << compared << " cones");
  CHECK(compared >= 40);
}

TEST_CASE("involutive_vs rejects inputs without two towers") {
  const auto box = build_box({-1, -1});
  MapBuilder b(box);
  const auto iota = make_involution(box, LaurentMatrix::identity(box.size()));
  CHECK_THROWS_AS(involutive_vs(build_cone(box, iota)), StructuralError);
  const auto a0 = subquotient(examples::right_trefoil(), Region::a0_minus());
  CHECK_THROWS_AS(build_cone(a0, PolyMatrix(1, 1)), InvalidArgument);
}
