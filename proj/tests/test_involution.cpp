#include <algorithm>

#include "cfk/error.hpp"
#include "cfk/examples.hpp"
#include "cfk/involution.hpp"
#include "cfk/pretzel.hpp"
#include "doctest.h"

using namespace cfk;

namespace {

bool has_rule(const std::vector<Violation>& v, const std::string& rule) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.rule == rule; });
}

ULaurent at(const FilteredComplex& c, const LaurentMatrix& m, std::string_view target, std::string_view source) {
  return m(c.index_of(target), c.index_of(source));
}

// Image of `source` as a sorted list of (id, power).
std::vector<std::pair<std::string, int>> image(const FilteredComplex& c, const LaurentMatrix& m,
                                               std::string_view source) {
  std::vector<std::pair<std::string, int>> out;
  const auto s = c.index_of(source);
  for (std::size_t t = 0; t < c.size(); ++t) {
    if (!m(t, s).is_zero()) out.emplace_back(c.generator(t).id, m(t, s).exponent());
  }
  std::sort(out.begin(), out.end());
  return out;
}

using Image = std::vector<std::pair<std::string, int>>;

}  // namespace

TEST_CASE("worked example involutions satisfy the involution laws") {
  for (const auto& name : examples::names()) {
    const auto ex = examples::by_name(name);
    INFO(name);
    CHECK(validate_involution(ex.complex, ex.iota, true).empty());
  }
  CHECK_THROWS_AS(examples::by_name("nope"), InvalidArgument);
}

TEST_CASE("trefoil involution swaps b and c") {
  const auto ex = examples::right_trefoil_example();
  const auto& m = ex.iota.map.matrix;
  CHECK(image(ex.complex, m, "a") == Image{{"a", 0}});
  CHECK(image(ex.complex, m, "b") == Image{{"c", 0}});
  CHECK(image(ex.complex, m, "c") == Image{{"b", 0}});
  // Sarkar map is the identity on the trefoil.
  CHECK(ex.iota.sigma.matrix == LaurentMatrix::identity(3));
}

TEST_CASE("figure-eight involution and its Sarkar map") {
  const auto ex = examples::figure_eight_example();
  const auto& c = ex.complex;
  const auto& m = ex.iota.map.matrix;
  CHECK(image(c, m, "a") == Image{{"a", 0}, {"x", 0}});
  CHECK(image(c, m, "x") == Image{{"e", 0}, {"x", 0}});
  // sigma(a) = a + e.
  CHECK(at(c, ex.iota.sigma.matrix, "e", "a").is_one());
  CHECK(at(c, ex.iota.sigma.matrix, "a", "a").is_one());
}

TEST_CASE("standard square pair on and off the diagonal") {
  for (const Plane corner : {Plane{-1, -1}, Plane{-1, 2}, Plane{3, -2}}) {
    const FilteredComplex parts[] = {build_box(corner, "_s"), build_box(corner.transposed(), "_t")};
    const auto c = direct_sum(parts);
    const auto iota = standard_square_pair_map(c, "_s", "_t");
    INFO(corner.i << "," << corner.j);
    CHECK(validate_involution(c, iota, true).empty());
  }
}

TEST_CASE("square pair rejects unmirrored boxes and wrong sizes") {
  const FilteredComplex parts[] = {build_box({-1, 2}, "_s"), build_box({-1, 2}, "_t")};
  const auto c = direct_sum(parts);
  CHECK_THROWS_AS(standard_square_pair_map(c, "_s", "_t"), InvalidArgument);
  CHECK_THROWS_AS(standard_square_pair_map(examples::figure_eight(), "", ""), InvalidArgument);
}

TEST_CASE("faults in the trefoil map are reported") {
  const auto c = examples::right_trefoil();
  SUBCASE("b fixed is not skew filtered") {
    MapBuilder b(c);
    b.set("a", {{"a"}}).set("b", {{"b"}}).set("c", {{"c"}});
    // Identity is filtered, not skew filtered.
    CHECK(has_rule(validate_involution(c, make_involution(c, b.matrix())), "skew_filtration"));
  }
  SUBCASE("grading change") {
    MapBuilder b(c);
    b.set("a", {{"b"}}).set("b", {{"c"}}).set("c", {{"b"}});
    CHECK_FALSE(validate_involution(c, make_involution(c, b.matrix())).empty());
  }
  SUBCASE("not a chain map") {
    MapBuilder b(c);
    b.set("a", {{"a"}}).set("b", {{"c"}});
    CHECK(has_rule(validate_involution(c, make_involution(c, b.matrix())), "chain_map"));
  }
}

TEST_CASE("figure-eight without the x correction fails the square law") {
  const auto c = examples::figure_eight();
  MapBuilder b(c);
  b.set("c", {{"b"}}).set("b", {{"c"}}).set("e", {{"e"}}).set("a", {{"a"}}).set("x", {{"x"}});
  const auto v = validate_involution(c, make_involution(c, b.matrix()));
  CHECK(has_rule(v, "square"));
}

TEST_CASE("C1 box: dropping +z0 breaks the square law") {
  const auto good = pretzel::c1_complex(2);
  CHECK(validate_involution(good.complex, good.iota, true).empty());
  auto m = good.iota.map.matrix;
  const auto& c = good.complex;
  m(c.index_of("z0"), c.index_of("a")) = ULaurent{};
  const auto v = validate_involution(c, make_involution(c, m));
  CHECK(!v.empty());
  CHECK((has_rule(v, "square") || has_rule(v, "chain_map")));
}

TEST_CASE("C1 box with the identity on the box is not skew filtered") {
  const auto good = pretzel::c1_complex(2);
  const auto& c = good.complex;
  auto m = good.iota.map.matrix;
  for (const char* id : {"a", "b", "c", "e"}) {
    for (std::size_t t = 0; t < c.size(); ++t) m(t, c.index_of(id)) = ULaurent{};
    m(c.index_of(id), c.index_of(id)) = ULaurent::one();
  }
  CHECK(has_rule(validate_involution(c, make_involution(c, m)), "skew_filtration"));
}

TEST_CASE("C1 involution formulas") {
  const auto k = pretzel::c1_complex(3);
  const auto& c = k.complex;
  const auto& m = k.iota.map.matrix;
  CHECK(image(c, m, "a") == Image{{"a", 0}, {"z0", 0}});
  CHECK(image(c, m, "b") == Image{{"c", 0}, {"z1^2", 0}});
  CHECK(image(c, m, "c") == Image{{"b", 0}, {"z1^1", 0}});
  CHECK(image(c, m, "z0") == Image{{"e", 0}, {"z0", 0}});
  CHECK(image(c, m, "e") == Image{{"e", 0}});
  CHECK(image(c, m, "z4^1") == Image{{"z4^2", 0}});
}

TEST_CASE("dual C1 involution is the transpose and matches the reference formulas after relabeling") {
  // The dual box is relabeled a' = e, e' = a, b' = U b, c' = U c so
  // that d a' = b' + c' again.
  for (int n = 2; n <= 5; ++n) {
    const auto k = pretzel::c1_complex(n, true);
    const auto& c = k.complex;
    const auto& m = k.iota.map.matrix;
    INFO("n(K) = " << n);
    CHECK(validate_involution(c, k.iota, true).empty());
    CHECK(image(c, m, "e") == Image{{"e", 0}, {"z0", 0}});     // a' -> a' + z0
    CHECK(image(c, m, "b") == Image{{"c", 0}});                // b' -> c'
    CHECK(image(c, m, "c") == Image{{"b", 0}});                // c' -> b'
    CHECK(image(c, m, "z0") == Image{{"a", 0}, {"z0", 0}});    // z0 -> z0 + e'
    CHECK(image(c, m, "z1^1") == Image{{"c", 0}, {"z1^2", 0}});  // z1^1 -> z1^2 + U^-1 c'
    CHECK(image(c, m, "z1^2") == Image{{"b", 0}, {"z1^1", 0}});  // z1^2 -> z1^1 + U^-1 b'
    CHECK(image(c, m, "a") == Image{{"a", 0}});                // e' -> e'
    CHECK(image(c, m, "z2^1") == Image{{"z2^2", 0}});
    // d a' = b' + c' under the relabeling: d e = U b + U c in the dual.
    CHECK(at(c, c.differential(), "b", "e") == ULaurent::monomial(1));
    CHECK(at(c, c.differential(), "c", "e") == ULaurent::monomial(1));
  }
}

TEST_CASE("C1 with n(K)=1 is an involution but does not exchange slots") {
  const auto k = pretzel::c1_complex(1);
  CHECK(validate_involution(k.complex, k.iota).empty());
  CHECK(has_rule(validate_involution(k.complex, k.iota, true), "slot"));
}

TEST_CASE("involution preserves A0 on every pretzel model and full complex") {
  for (int m = 3; m <= 11; m += 2) {
    for (int n = 3; n <= m; n += 2) {
      for (bool mirrored : {false, true}) {
        const auto p = pretzel::Params::make(m, n);
        for (const auto& k : {pretzel::model_complex(p, mirrored), pretzel::full_complex(p, mirrored)}) {
          INFO(m << "," << n << (mirrored ? " mirror" : ""));
          CHECK(validate_involution(k.complex, k.iota, true).empty());
          const auto a0 = subquotient(k.complex, Region::a0_minus());
          // restrict_map throws if iota leaves A0.
          CHECK_NOTHROW(restrict_map(k.iota.map.matrix, a0, a0));
        }
      }
    }
  }
}

TEST_CASE("dual of the dual recovers the complex and its involution") {
  const auto k = pretzel::full_complex(pretzel::Params::make(9, 7));
  const auto dd = dualize(dualize(k.complex));
  CHECK(dd.generators().size() == k.complex.size());
  for (std::size_t x = 0; x < dd.size(); ++x) {
    CHECK(dd.generator(x).id == k.complex.generator(x).id);
    CHECK(dd.generator(x).plane == k.complex.generator(x).plane);
    CHECK(dd.generator(x).maslov == k.complex.generator(x).maslov);
  }
  CHECK(dd.differential() == k.complex.differential());
  const auto back = dual_involution(dd, dual_involution(dualize(k.complex), k.iota));
  CHECK(back.map.matrix == k.iota.map.matrix);
}

TEST_CASE("staircase involution rejects non-staircase generators") {
  CHECK_THROWS_AS(standard_staircase_involution(examples::figure_eight()), InvalidArgument);
  const int steps[] = {1, 2, 1};
  const auto s = build_staircase(StaircaseSign::negative, steps);
  CHECK(validate_involution(s, standard_staircase_involution(s), true).empty());
}
