#include "cfk/error.hpp"
#include "cfk/pretzel.hpp"
#include "doctest.h"

using namespace cfk;
using pretzel::Family;
using pretzel::Params;

namespace {

std::map<int, int> diagonals(const std::vector<pretzel::LedgerEntry>& ledger) {
  std::map<int, int> out;
  for (const auto& e : ledger) out[e.plane.j - e.plane.i]++;
  return out;
}

std::map<int, int> diagonals(const FilteredComplex& c) {
  std::map<int, int> out;
  for (const auto& g : c.generators()) out[g.plane.j - g.plane.i]++;
  return out;
}

Plane plane_of(const std::vector<pretzel::LedgerEntry>& ledger, const std::string& label) {
  for (const auto& e : ledger) {
    if (e.label == label) return e.plane;
  }
  FAIL("missing ledger label " << label);
  return {};
}

long long eval_at_one(const AlexanderPoly& p) {
  long long s = 0;
  for (const auto& [e, c] : p) s += c;
  return s;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(Params::make(4, 3), InvalidArgument);
  CHECK_THROWS_AS(Params::make(3, 5), InvalidArgument);
  CHECK_THROWS_AS(Params::make(1, 1), InvalidArgument);
  CHECK_THROWS_AS(Params::make(7, 6), InvalidArgument);
  const auto p = Params::make(9, 7);
  CHECK(p.genus() == 8);
  CHECK(p.m_prime() == 3);
  CHECK(p.n_prime() == 2);
}

TEST_CASE("gamma and delta case formulas") {
  CHECK(Params::make(5, 5).gamma() == -1);
  CHECK(Params::make(5, 5).delta() == 2);
  for (int m = 3; m <= 21; m += 2) {
    for (int n = 3; n <= m; n += 2) {
      const auto p = Params::make(m, n);
      const int g = p.genus();
      // Both branches give gamma + delta = 1 for odd g and 0 for even g.
      CHECK(p.gamma() + p.delta() == (g % 2 == 1 ? 1 : 0));
    }
  }
}

TEST_CASE("classification") {
  auto check = [](int m, int n, Family f, int nk) {
    const auto s = pretzel::classify(Params::make(m, n));
    CHECK(s.family == f);
    CHECK(s.n_of_k == nk);
    CHECK(s.v == (m + n) / 2 - 1);
    CHECK(s.u == (m + n - 6) / 2);
    CHECK(s.main_diag_boxes == (f == Family::C1 ? 1 : 0));
  };
  check(5, 5, Family::C1, 2);
  check(7, 5, Family::C2, 3);
  check(7, 7, Family::C3, 3);
  check(9, 7, Family::C4, 4);
  check(3, 3, Family::C3, 1);
  CHECK(pretzel::to_string(Family::C4) == "C4");
}

TEST_CASE("box multiplicities") {
  CHECK(pretzel::box_multiplicities(Params::make(9, 9)) == std::map<int, int>{{-4, 1}, {-2, 2}, {0, 3}, {2, 2}, {4, 1}});
  CHECK(pretzel::box_multiplicities(Params::make(5, 5)) == std::map<int, int>{{0, 1}});
  CHECK(pretzel::box_multiplicities(Params::make(7, 5)) == std::map<int, int>{{-1, 1}, {1, 1}});
  CHECK(pretzel::box_multiplicities(Params::make(3, 3)).empty());
  for (int m = 3; m <= 21; m += 2) {
    for (int n = 3; n <= m; n += 2) {
      const auto p = Params::make(m, n);
      const auto b = pretzel::box_multiplicities(p);
      INFO(m << "," << n);
      CHECK(b == pretzel::box_multiplicities_closed_form(p));
      for (const auto& [s, k] : b) CHECK(b.at(-s) == k);
      // Main-diagonal boxes exist iff m = n mod 4, then (n-3)/2 of them.
      const int main = b.contains(0) ? b.at(0) : 0;
      CHECK(main == (p.congruent() ? (n - 3) / 2 : 0));
    }
  }
}

TEST_CASE("generator counts agree with the ledger") {
  CHECK(pretzel::gmm_ledger(Params::make(3, 3)).size() == 5);
  CHECK(pretzel::full_complex(Params::make(9, 9)).complex.size() == 53);
  for (int m = 3; m <= 21; m += 2) {
    for (int n = 3; n <= m; n += 2) {
      const auto p = Params::make(m, n);
      const std::size_t expected = 4 + (m - 2) * (n - 2);
      INFO(m << "," << n);
      CHECK(pretzel::gmm_ledger(p).size() == expected);
      CHECK(pretzel::gmm_ledger(p, pretzel::LedgerReading::literal).size() == expected);
      CHECK(pretzel::full_complex(p).complex.size() == expected);
    }
  }
}

TEST_CASE("ledger diagonals match the full complex under the corrected reading") {
  for (int m = 3; m <= 15; m += 2) {
    for (int n = 3; n <= m; n += 2) {
      const auto p = Params::make(m, n);
      INFO(m << "," << n);
      CHECK(diagonals(pretzel::gmm_ledger(p)) == diagonals(pretzel::full_complex(p).complex));
    }
  }
  // The literal reading disagrees as soon as the x_{2p,2q+1} family is nonempty.
  const auto p = Params::make(9, 9);
  CHECK(diagonals(pretzel::gmm_ledger(p, pretzel::LedgerReading::literal)) !=
        diagonals(pretzel::full_complex(p).complex));
}

TEST_CASE("exceptional generators form the two length-two steps") {
  for (int m = 3; m <= 15; m += 2) {
    for (int n = 3; n <= m; n += 2) {
      const auto l = pretzel::gmm_ledger(Params::make(m, n));
      const auto y1 = plane_of(l, "y1"), y2 = plane_of(l, "y2"), y3 = plane_of(l, "y3"), y4 = plane_of(l, "y4");
      const auto x11 = plane_of(l, "x1,1");
      const auto xlast = plane_of(l, "x" + std::to_string(n - 2) + "," + std::to_string(m - 2));
      INFO(m << "," << n);
      CHECK(Plane{y1.i - y2.i, y1.j - y2.j} == Plane{0, 1});
      CHECK(Plane{x11.i - y2.i, x11.j - y2.j} == Plane{2, 0});
      CHECK(Plane{y4.i - y3.i, y4.j - y3.j} == Plane{1, 0});
      CHECK(Plane{xlast.i - y3.i, xlast.j - y3.j} == Plane{0, 2});
      int exceptional = 0;
      for (const auto& e : l) exceptional += e.exceptional ? 1 : 0;
      CHECK(exceptional == 4);
    }
  }
  const auto l = pretzel::gmm_ledger(Params::make(5, 5));
  CHECK(plane_of(l, "y2") == Plane{-2, 2});
  CHECK(plane_of(l, "y2").j - plane_of(l, "y2").i == 4);
}

TEST_CASE("expected knot Floer ranks") {
  const auto h = pretzel::expected_hfk(Params::make(9, 9));
  CHECK(h.at({4, 12}) == 3);
  CHECK(h.at({9, 18}) == 1);
  CHECK_FALSE(h.contains({7, 15}));
  const auto mirror = pretzel::expected_hfk(Params::make(9, 9), true);
  CHECK(mirror.at({-4, -12}) == 3);
}

TEST_CASE("full complex reproduces the knot Floer table, Alexander polynomial and genus") {
  for (int m = 3; m <= 15; m += 2) {
    for (int n = 3; n <= m; n += 2) {
      const auto p = Params::make(m, n);
      INFO(m << "," << n);
      for (bool mirrored : {false, true}) {
        const auto full = pretzel::full_complex(p, mirrored).complex;
        CHECK(validate(full).empty());
        const auto h = hfk_hat(full);
        CHECK(h == pretzel::expected_hfk(p, mirrored));
        CHECK(genus(h) == p.genus());
        CHECK(alexander_poly(h) == pretzel::expected_alexander(p));
      }
      const auto delta = pretzel::expected_alexander(p);
      CHECK(eval_at_one(delta) == 1);
      for (const auto& [e, c] : delta) CHECK(delta.at(-e) == c);
    }
  }
}

TEST_CASE("theorem values") {
  using pretzel::Triple;
  CHECK(pretzel::theorem_values(Params::make(5, 5), false) == Triple{0, 0, -2});
  CHECK(pretzel::theorem_values(Params::make(5, 5), true) == Triple{2, 3, 2});
  CHECK(pretzel::theorem_values(Params::make(7, 5), true) == Triple{3, 3, 3});
  CHECK(pretzel::theorem_values(Params::make(7, 7), true) == Triple{3, 3, 3});
  CHECK(pretzel::theorem_values(Params::make(3, 3), false) == Triple{0, 0, -1});
}

TEST_CASE("pipeline matches the theorem on small cases") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 3}, {5, 5}, {7, 5}, {7, 7}, {9, 7}, {13, 9}}) {
    for (bool mirrored : {false, true}) {
      const auto r = pretzel::compute_invariants(Params::make(m, n), mirrored);
      INFO(m << "," << n << (mirrored ? " mirror" : ""));
      CHECK(r.theorem_match());
    }
  }
}

TEST_CASE("model and full complexes give the same invariants") {
  for (int m = 3; m <= 13; m += 2) {
    for (int n = 3; n <= m; n += 2) {
      for (bool mirrored : {false, true}) {
        const auto p = Params::make(m, n);
        INFO(m << "," << n << (mirrored ? " mirror" : ""));
        const auto model = pretzel::compute_invariants(p, mirrored, false);
        const auto full = pretzel::compute_invariants(p, mirrored, true);
        CHECK(model.computed == full.computed);
        CHECK(full.generators == static_cast<std::size_t>(4 + (m - 2) * (n - 2)));
      }
    }
  }
}

TEST_CASE("cross-checks pass") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 3}, {9, 9}, {11, 5}}) {
    for (bool mirrored : {false, true}) {
      const auto r = pretzel::compute_invariants(Params::make(m, n), mirrored);
      const auto c = pretzel::run_checks(r);
      CHECK(c.all());
    }
  }
}

TEST_CASE("C1 complex needs a positive n(K)") { CHECK_THROWS_AS(pretzel::c1_complex(0), InvalidArgument); }
