#include "cfk/pretzel.hpp"

#include <algorithm>

#include "cfk/error.hpp"

namespace cfk::pretzel {

Params Params::make(int m, int n) {
  if (m % 2 == 0 || n % 2 == 0) throw InvalidArgument("m and n must be odd");
  if (n < 3) throw InvalidArgument("n must be at least 3");
  if (m < n) throw InvalidArgument("requires m >= n");
  return {m, n};
}

int Params::gamma() const {
  const int g = genus();
  return g % 2 == 1 ? 1 - (g - 1) / 2 : 1 - g / 2;
}

int Params::delta() const {
  const int g = genus();
  return g % 2 == 1 ? (g - 1) / 2 : g / 2 - 1;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::C1:
      return "C1";
    case Family::C2:
      return "C2";
    case Family::C3:
      return "C3";
    case Family::C4:
      return "C4";
  }
  return "?";
}

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

std::vector<int> pretzel_steps(const Params& p) {
  const int v = p.genus() - 1;
  std::vector<int> steps(v, 1);
  steps[1] = 2;
  return steps;
}

FilteredComplex pretzel_staircase(const Params& p) {
  return build_staircase(StaircaseSign::negative, pretzel_steps(p));
}

// Total knot Floer rank per Alexander grading.
std::map<int, int> totals(const HfkTable& t) {
  std::map<int, int> out;
  for (const auto& [wk, r] : t) out[wk.first] += r;
  return out;
}

std::string box_suffix(int s, int k) { return "_" + std::to_string(s) + "_" + std::to_string(k); }

Plane box_corner(int s) {
  if (s == 0) return {-1, -1};
  if (s > 0) return {-1, s - 1};
  return {-s - 1, -1};
}

struct Assembled {
  FilteredComplex complex;
  LaurentMatrix iota;
};

Assembled assemble(const Params& p, bool all_boxes) {
  const auto spec = classify(p);
  const auto stair = pretzel_staircase(p);
  const int z0 = stair.generator(stair.index_of("z0")).maslov;
  auto thin_box = [&](int s, const std::string& suffix) {
    const Plane corner = box_corner(s);
    // Ordinary generators satisfy M = i + j + M(z0); a sits at corner + (1,1).
    return build_box(corner, corner.i + corner.j + z0, suffix);
  };

  std::vector<FilteredComplex> parts{stair};
  std::vector<std::pair<std::string, std::string>> pairs;
  const bool leftover = spec.main_diag_boxes == 1;
  if (all_boxes) {
    for (const auto& [s, count] : spec.boxes) {
      if (s < 0) continue;
      if (s > 0) {
        for (int k = 1; k <= count; ++k) {
          parts.push_back(thin_box(s, box_suffix(s, k)));
          parts.push_back(thin_box(-s, box_suffix(-s, k)));
          pairs.emplace_back(box_suffix(s, k), box_suffix(-s, k));
        }
        continue;
      }
      const int paired = leftover ? count - 1 : count;
      for (int k = 1; k + 1 <= paired; k += 2) {
        parts.push_back(thin_box(0, box_suffix(0, k)));
        parts.push_back(thin_box(0, box_suffix(0, k + 1)));
        pairs.emplace_back(box_suffix(0, k), box_suffix(0, k + 1));
      }
    }
  }
  if (leftover) parts.push_back(thin_box(0, ""));

  auto complex = direct_sum(parts);
  MapBuilder b(complex);
  add_staircase_reflection(b, complex);
  for (const auto& [s, t] : pairs) add_square_pair(b, complex, s, t);
  if (leftover) add_c1_box(b, "");
  return {std::move(complex), b.matrix()};
}

Complex finish(Assembled a, bool mirrored) {
  if (!mirrored) {
    auto iota = make_involution(a.complex, std::move(a.iota));
    return {std::move(a.complex), std::move(iota)};
  }
  auto dual = dualize(a.complex);
  auto iota = make_involution(dual, a.iota.transposed());
  return {std::move(dual), std::move(iota)};
}

}  // namespace

ModelSpec classify(const Params& p) {
  ModelSpec s;
  const int a = mod4(p.m), b = mod4(p.n);
  if (a == 1 && b == 1) {
    s.family = Family::C1;
  } else if (a == 3 && b == 1) {
    s.family = Family::C2;
  } else if (a == 3 && b == 3) {
    s.family = Family::C3;
  } else {
    s.family = Family::C4;
  }
  s.v = p.genus() - 1;
  s.u = s.v - 2;
  s.steps = pretzel_steps(p);
  s.n_of_k = p.congruent() ? (p.m + p.n - 2) / 4 : (p.m + p.n) / 4;
  if (staircase_n(s.steps) != s.n_of_k) throw StructuralError("staircase n(K) disagrees with the family formula");
  s.main_diag_boxes = s.family == Family::C1 ? 1 : 0;
  s.boxes = box_multiplicities(p);
  return s;
}

std::map<int, int> box_multiplicities(const Params& p) {
  auto residual = totals(expected_hfk(p));
  for (const auto& [w, r] : totals(hfk_hat(pretzel_staircase(p)))) residual[w] -= r;
  std::map<int, int> out;
  if (residual.empty()) return out;
  const int top = residual.rbegin()->first;
  const int bottom = residual.begin()->first;
  for (int w = top; w >= bottom; --w) {
    const int count = residual[w];
    if (count < 0) throw StructuralError("knot Floer ranks admit no box decomposition");
    if (count == 0) continue;
    out[w - 1] = count;
    residual[w] -= count;
    residual[w - 1] -= 2 * count;
    residual[w - 2] -= count;
  }
  for (const auto& [w, r] : residual) {
    if (r != 0) throw StructuralError("knot Floer ranks admit no box decomposition");
  }
  return out;
}

std::map<int, int> box_multiplicities_closed_form(const Params& p) {
  const int g = p.genus();
  std::map<int, int> out;
  for (int k = 1; k <= (p.n - 5) / 2; ++k) {
    out[g - 2 * k - 3] += k;
    out[-(g - 2 * k - 3)] += k;
  }
  for (int s = -(g - p.n); s <= g - p.n; s += 2) out[s] += (p.n - 3) / 2;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Complex c1_complex(int n_of_k, bool mirrored) {
  if (n_of_k < 1) throw InvalidArgument("n(K) must be positive");
  std::vector<int> steps(2 * n_of_k, 1);
  steps[1] = 2;
  const auto stair = build_staircase(StaircaseSign::negative, steps);
  const int z0 = stair.generator(stair.index_of("z0")).maslov;
  const FilteredComplex parts[] = {stair, build_box(box_corner(0), -2 + z0)};
  auto complex = direct_sum(parts);
  MapBuilder b(complex);
  add_staircase_reflection(b, complex);
  add_c1_box(b, "");
  return finish({std::move(complex), b.matrix()}, mirrored);
}

FilteredComplex staircase(const Params& p, bool mirrored) {
  auto s = pretzel_staircase(p);
  return mirrored ? dualize(s) : s;
}

std::vector<std::pair<Plane, int>> box_corners(const ModelSpec& spec, bool mirrored) {
  std::vector<std::pair<Plane, int>> out;
  for (const auto& [s, count] : spec.boxes) {
    const Plane c = box_corner(s);
    // Dualizing sends the box with corner (i,j) to the one with corner (-i-1,-j-1).
    out.emplace_back(mirrored ? Plane{-c.i - 1, -c.j - 1} : c, count);
  }
  return out;
}

Complex full_complex(const Params& p, bool mirrored) { return finish(assemble(p, true), mirrored); }

Complex model_complex(const Params& p, bool mirrored) { return finish(assemble(p, false), mirrored); }

std::vector<LedgerEntry> gmm_ledger(const Params& p, LedgerReading reading) {
  const int ga = p.gamma(), de = p.delta();
  const int mp = p.m_prime(), np = p.n_prime();
  std::vector<LedgerEntry> out{
      {"y1", {ga - 1, de + 1}, true},
      {"y2", {ga - 1, de}, true},
      {"y3", {de, ga - 1}, true},
      {"y4", {de + 1, ga - 1}, true},
  };
  auto x = [](int a, int b) { return "x" + std::to_string(a) + "," + std::to_string(b); };
  for (int pp = 0; pp <= np; ++pp) {
    for (int q = 0; q <= mp; ++q) out.push_back({x(2 * pp + 1, 2 * q + 1), {ga + pp + q + 1, de - pp - q}, false});
  }
  for (int pp = 0; pp <= np; ++pp) {
    for (int q = 1; q <= mp; ++q) out.push_back({x(2 * pp + 1, 2 * q), {ga + pp + q, de - pp - q}, false});
  }
  for (int pp = 1; pp <= np; ++pp) {
    for (int q = 0; q <= mp; ++q) {
      const int j = reading == LedgerReading::literal ? de - mp - pp - q : de - mp - pp + q;
      out.push_back({x(2 * pp, 2 * q + 1), {ga + mp + pp - q, j}, false});
    }
  }
  for (int pp = 1; pp <= np; ++pp) {
    for (int q = 1; q <= mp; ++q) {
      out.push_back({x(2 * pp, 2 * q), {ga + mp + pp - q, de - mp - pp + q - 1}, false});
    }
  }
  return out;
}

HfkTable expected_hfk(const Params& p, bool mirrored) {
  const int g = p.genus(), n = p.n;
  HfkTable out;
  auto put = [&](int w, int k, int rank) {
    if (rank == 0) return;
    out[{w, k}] = rank;
    if (w != 0) out[{-w, k - 2 * w}] = rank;
  };
  for (int w = 0; w <= g; ++w) {
    if (w == g || w == g - 1) {
      put(w, g + w, 1);
    } else if (w == g - 2) {
      continue;
    } else if (w >= g - n) {
      put(w, g - 1 + w, g - 2 - w);
    } else {
      put(w, g - 1 + w, n - 2);
    }
  }
  if (!mirrored) return out;
  HfkTable dual;
  for (const auto& [wk, r] : out) dual[{-wk.first, -wk.second}] = r;
  return dual;
}

AlexanderPoly expected_alexander(const Params& p) {
  const int g = p.genus(), n = p.n;
  AlexanderPoly out;
  auto sign = [](int e) { return e % 2 == 0 ? 1 : -1; };
  out[g] += 1;
  out[g - 1] -= 1;
  for (int k = 1; k <= n - 3; ++k) out[g - k - 2] += sign(k - 1) * k;
  for (int k = n - g; k <= g - n; ++k) out[k] += sign(g - k - 1) * (n - 2);
  for (int k = 1; k <= n - 3; ++k) out[k + 2 - g] += sign(k - 1) * k;
  out[1 - g] -= 1;
  out[-g] += 1;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Triple theorem_values(const Params& p, bool mirrored) {
  const int m = p.m, n = p.n;
  if (!mirrored) {
    return {0, 0, p.congruent() ? -(m + n - 2) / 4 : -(m + n) / 4};
  }
  if (!p.congruent()) return {(m + n) / 4, (m + n) / 4, (m + n) / 4};
  const int base = (m + n - 2) / 4;
  if (mod4(m) == 3) return {base, base, base};
  return {base, (m + n + 2) / 4, base};
}

Report compute_invariants(const Params& p, bool mirrored, bool use_full) {
  Report r;
  r.params = p;
  r.mirrored = mirrored;
  r.full = use_full;
  r.spec = classify(p);
  const auto model = use_full ? full_complex(p, mirrored) : model_complex(p, mirrored);
  r.generators = model.complex.size();

  const auto a0 = subquotient(model.complex, Region::a0_minus());
  const auto h = homology_over_u(a0);
  r.a0_homology = h.module();
  r.computed.v0 = v0(model.complex);
  r.cone = involutive_vs(build_cone(a0, restrict_map(model.iota.map.matrix, a0, a0)));
  r.computed.v0_lower = r.cone.v0_lower;
  r.computed.v0_upper = r.cone.v0_upper;
  r.expected = theorem_values(p, mirrored);
  return r;
}

Checks run_checks(const Report& r) {
  const auto& p = r.params;
  Checks c;
  c.theorem_match = r.theorem_match();
  const auto full = full_complex(p, r.mirrored);
  const auto model = model_complex(p, r.mirrored);
  const auto hfk = hfk_hat(full.complex);
  c.hfk_match = hfk == expected_hfk(p, r.mirrored);
  c.alexander_match = alexander_poly(hfk) == expected_alexander(p);
  c.genus_match = genus(hfk) == p.genus();
  const auto expected_count = static_cast<std::size_t>(4 + (p.m - 2) * (p.n - 2));
  c.count_match = full.complex.size() == expected_count && gmm_ledger(p).size() == expected_count;
  c.structure_ok = validate(full.complex).empty() && validate(model.complex).empty() &&
                   validate_involution(full.complex, full.iota, true).empty() &&
                   validate_involution(model.complex, model.iota, true).empty();
  return c;
}

}  // namespace cfk::pretzel
