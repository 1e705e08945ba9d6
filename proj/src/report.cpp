#include "cfk/report.hpp"

#include "cfk/error.hpp"

namespace cfk {

using nlohmann::json;

json to_json(const GradedModule& m) {
  json out = {{"free", json::array()}, {"torsion", json::array()}};
  for (const auto& f : m.free) out["free"].push_back({{"grading", f.grading}});
  for (const auto& t : m.torsion) out["torsion"].push_back({{"grading", t.grading}, {"order", t.order_exp}});
  return out;
}

json to_json(const HfkTable& t) {
  json out = json::array();
  for (const auto& [wk, r] : t) out.push_back({{"alexander", wk.first}, {"maslov", wk.second}, {"rank", r}});
  return out;
}

json to_json(const AlexanderPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p) out.push_back({{"exponent", e}, {"coefficient", c}});
  return out;
}

json to_json(const FilteredComplex& c) {
  json gens = json::array();
  for (const auto& g : c.generators()) {
    gens.push_back({{"id", g.id}, {"maslov", g.maslov}, {"i", g.plane.i}, {"j", g.plane.j}});
  }
  json arrows = json::array();
  const auto& d = c.differential();
  for (std::size_t s = 0; s < c.size(); ++s) {
    for (std::size_t t = 0; t < c.size(); ++t) {
      if (d(t, s).is_zero()) continue;
      arrows.push_back({{"source", c.generator(s).id}, {"target", c.generator(t).id}, {"upower", d(t, s).exponent()}});
    }
  }
  return {{"generators", gens}, {"arrows", arrows}};
}

json map_json(const FilteredComplex& c, const LaurentMatrix& m) {
  json out = json::array();
  for (std::size_t s = 0; s < c.size(); ++s) {
    json image = json::array();
    for (std::size_t t = 0; t < c.size(); ++t) {
      const auto& e = m(t, s);
      if (e.is_zero()) continue;
      image.push_back({{"id", c.generator(t).id}, {"upower", e.exponent()}});
    }
    out.push_back({{"source", c.generator(s).id}, {"image", image}});
  }
  return out;
}

json complex_json(const std::vector<std::string>& labels, const std::vector<int>& gradings, const PolyMatrix& diff) {
  json basis = json::array();
  for (std::size_t k = 0; k < labels.size(); ++k) basis.push_back({{"label", labels[k]}, {"grading", gradings[k]}});
  json d = json::array();
  for (std::size_t s = 0; s < labels.size(); ++s) {
    for (std::size_t t = 0; t < labels.size(); ++t) {
      if (diff(t, s).is_zero()) continue;
      d.push_back({{"source", labels[s]}, {"target", labels[t]}, {"coefficient", diff(t, s).to_string()}});
    }
  }
  return {{"basis", basis}, {"differential", d}};
}

namespace pretzel {

ReportRecord make_record(const Report& r, const Checks& c) {
  ReportRecord out;
  out.m = r.params.m;
  out.n = r.params.n;
  out.mirrored = r.mirrored;
  out.family = to_string(r.spec.family);
  out.v = r.spec.v;
  out.n_of_k = r.spec.n_of_k;
  for (const auto& [s, k] : r.spec.boxes) out.boxes.emplace_back(s, k);
  out.computed = r.computed;
  out.expected = r.expected;
  out.tower_gradings = r.cone.tower_gradings;
  for (const auto& t : r.cone.homology.torsion) out.torsion_summands.emplace_back(t.grading, t.order_exp);
  out.checks = c;
  return out;
}

json to_json(const ReportRecord& r) {
  json boxes = json::array();
  for (const auto& [s, k] : r.boxes) boxes.push_back({{"diagonal", s}, {"count", k}});
  json torsion = json::array();
  for (const auto& [g, o] : r.torsion_summands) torsion.push_back({{"grading", g}, {"order", o}});
  return {
      {"m", r.m},
      {"n", r.n},
      {"mirrored", r.mirrored},
      {"family", r.family},
      {"v", r.v},
      {"nK", r.n_of_k},
      {"boxes", boxes},
      {"V0", r.computed.v0},
      {"V0_lower", r.computed.v0_lower},
      {"V0_upper", r.computed.v0_upper},
      {"expected", {{"V0", r.expected.v0}, {"V0_lower", r.expected.v0_lower}, {"V0_upper", r.expected.v0_upper}}},
      {"tower_gradings", r.tower_gradings},
      {"torsion_summands", torsion},
      {"checks",
       {{"theorem_match", r.checks.theorem_match},
        {"hfk_match", r.checks.hfk_match},
        {"alexander_match", r.checks.alexander_match},
        {"genus_match", r.checks.genus_match},
        {"count_match", r.checks.count_match},
        {"structure_ok", r.checks.structure_ok}}},
  };
}

ReportRecord record_from_json(const json& j) {
  try {
    ReportRecord r;
    r.m = j.at("m").get<int>();
    r.n = j.at("n").get<int>();
    r.mirrored = j.at("mirrored").get<bool>();
    r.family = j.at("family").get<std::string>();
    r.v = j.at("v").get<int>();
    r.n_of_k = j.at("nK").get<int>();
    for (const auto& b : j.at("boxes")) r.boxes.emplace_back(b.at("diagonal").get<int>(), b.at("count").get<int>());
    r.computed = {j.at("V0").get<int>(), j.at("V0_lower").get<int>(), j.at("V0_upper").get<int>()};
    const auto& e = j.at("expected");
    r.expected = {e.at("V0").get<int>(), e.at("V0_lower").get<int>(), e.at("V0_upper").get<int>()};
    r.tower_gradings = j.at("tower_gradings").get<std::vector<int>>();
    for (const auto& t : j.at("torsion_summands")) {
      r.torsion_summands.emplace_back(t.at("grading").get<int>(), t.at("order").get<int>());
    }
    const auto& c = j.at("checks");
    r.checks.theorem_match = c.at("theorem_match").get<bool>();
    r.checks.hfk_match = c.at("hfk_match").get<bool>();
    r.checks.alexander_match = c.at("alexander_match").get<bool>();
    r.checks.genus_match = c.at("genus_match").get<bool>();
    r.checks.count_match = c.at("count_match").get<bool>();
    r.checks.structure_ok = c.at("structure_ok").get<bool>();
    return r;
  } catch (const json::exception& ex) {
    throw InvalidArgument(std::string("malformed report JSON: ") + ex.what());
  }
}

}  // namespace pretzel
}  // namespace cfk
