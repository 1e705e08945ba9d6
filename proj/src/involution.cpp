#include "cfk/involution.hpp"

#include <regex>

#include "cfk/error.hpp"

namespace cfk {

MapBuilder& MapBuilder::set(std::string_view source, const std::vector<Term>& image) {
  const auto x = c_->index_of(source);
  for (std::size_t y = 0; y < m_.rows(); ++y) m_(y, x) = ULaurent::zero();
  for (const auto& t : image) m_(c_->index_of(t.id), x) += ULaurent::monomial(t.upower);
  return *this;
}

Involution make_involution(const FilteredComplex& c, LaurentMatrix m) {
  return {{std::move(m), FiltrationKind::skew_filtered, 0}, sarkar(c)};
}

namespace {

const std::regex& staircase_id() {
  static const std::regex re(R"(z(\d+)\^([12]))");
  return re;
}

}  // namespace

void add_staircase_reflection(MapBuilder& b, const FilteredComplex& c) {
  for (const auto& g : c.generators()) {
    std::smatch m;
    if (g.id == "z0") {
      b.set("z0", {{"z0"}});
    } else if (std::regex_match(g.id, m, staircase_id())) {
      b.set(g.id, {{"z" + m[1].str() + (m[2].str() == "1" ? "^2" : "^1")}});
    }
  }
}

void add_square_pair(MapBuilder& b, const FilteredComplex& c, std::string_view s, std::string_view t) {
  const std::string p(s), q(t);
  const auto& one = c.generator(c.index_of("a" + p)).plane;
  const auto& two = c.generator(c.index_of("a" + q)).plane;
  if (one.transposed() != two) throw InvalidArgument("square pair '" + p + "', '" + q + "' is not mirrored");
  b.set("a" + p, {{"a" + q}, {"e" + q}})
      .set("b" + p, {{"c" + q}})
      .set("c" + p, {{"b" + q}})
      .set("e" + p, {{"e" + q}})
      .set("a" + q, {{"a" + p}})
      .set("b" + q, {{"c" + p}})
      .set("c" + q, {{"b" + p}})
      .set("e" + q, {{"e" + p}});
}

void add_c1_box(MapBuilder& b, std::string_view s) {
  const std::string p(s);
  b.set("a" + p, {{"a" + p}, {"z0"}})
      .set("b" + p, {{"c" + p}, {"z1^2"}})
      .set("c" + p, {{"b" + p}, {"z1^1"}})
      .set("z0", {{"z0"}, {"e" + p}})
      .set("e" + p, {{"e" + p}});
}

Involution standard_staircase_involution(const FilteredComplex& c) {
  for (const auto& g : c.generators()) {
    if (g.id != "z0" && !std::regex_match(g.id, staircase_id())) {
      throw InvalidArgument("'" + g.id + "' is not a staircase generator");
    }
  }
  MapBuilder b(c);
  add_staircase_reflection(b, c);
  return make_involution(c, b.matrix());
}

Involution standard_square_pair_map(const FilteredComplex& c, std::string_view s, std::string_view t) {
  if (c.size() != 8) throw InvalidArgument("a square pair has eight generators");
  MapBuilder b(c);
  add_square_pair(b, c, s, t);
  return make_involution(c, b.matrix());
}

Involution dual_involution(const FilteredComplex& dual, const Involution& iota) {
  return make_involution(dual, iota.map.matrix.transposed());
}

std::vector<Violation> validate_involution(const FilteredComplex& c, const Involution& iota, bool exact_slots) {
  auto out = validate_map(c, c, iota.map);
  if (iota.map.kind != FiltrationKind::skew_filtered) out.push_back({"kind", "map is not marked skew-filtered"});
  if (iota.map.maslov_shift != 0) out.push_back({"kind", "map does not preserve the Maslov grading"});
  if (!out.empty()) return out;
  const auto square = iota.map.matrix * iota.map.matrix;
  for (std::size_t x = 0; x < c.size(); ++x) {
    for (std::size_t y = 0; y < c.size(); ++y) {
      if (square(y, x) != iota.sigma.matrix(y, x)) {
        out.push_back({"square", "iota^2 and sigma differ at (" + c.generator(y).id + ", " + c.generator(x).id + ")"});
      }
    }
  }
  if (exact_slots) {
    const auto& m = iota.map.matrix;
    for (std::size_t x = 0; x < c.size(); ++x) {
      for (std::size_t y = 0; y < c.size(); ++y) {
        if (m(y, x).is_zero()) continue;
        if (c.generator(y).plane.translated(m(y, x).exponent()) != c.generator(x).plane.transposed()) {
          out.push_back({"slot", "iota(" + c.generator(x).id + ") has " + c.generator(y).id + " off the mirrored slot"});
        }
      }
    }
  }
  return out;
}

}  // namespace cfk
