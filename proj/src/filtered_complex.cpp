#include "cfk/filtered_complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cfk/error.hpp"
#include "cfk/f2.hpp"

namespace cfk {

namespace {

std::string entry_name(const FilteredComplex& c, std::size_t target, std::size_t source) {
  return "d(" + c.generator(source).id + ") -> " + c.generator(target).id;
}

std::string power_prefix(int k) {
  if (k == 0) return "";
  if (k == 1) return "U";
  return "U^" + std::to_string(k);
}

}  // namespace

FilteredComplex::FilteredComplex(std::vector<Generator> gens, LaurentMatrix diff)
    : gens_(std::move(gens)), diff_(std::move(diff)) {
  if (diff_.rows() != gens_.size() || diff_.cols() != gens_.size()) {
    throw InvalidArgument("differential shape does not match the generator count");
  }
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (!index_.emplace(gens_[k].id, k).second) throw InvalidArgument("duplicate generator id '" + gens_[k].id + "'");
  }
}

std::optional<std::size_t> FilteredComplex::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FilteredComplex::index_of(std::string_view id) const {
  auto k = find(id);
  if (!k) throw InvalidArgument("unknown generator '" + std::string(id) + "'");
  return *k;
}

ComplexBuilder& ComplexBuilder::add(std::string id, int maslov, Plane plane) {
  gens_.push_back({std::move(id), maslov, plane});
  return *this;
}

ComplexBuilder& ComplexBuilder::arrow(std::string_view source, std::string_view target, int upower) {
  arrows_.push_back({std::string(source), std::string(target), upower});
  return *this;
}

FilteredComplex ComplexBuilder::build() const {
  LaurentMatrix diff(gens_.size(), gens_.size());
  FilteredComplex shell(gens_, diff);
  for (const auto& a : arrows_) {
    diff(shell.index_of(a.target), shell.index_of(a.source)) += ULaurent::monomial(a.upower);
  }
  return {gens_, std::move(diff)};
}

std::vector<Violation> validate(const FilteredComplex& c) {
  std::vector<Violation> out;
  const auto& d = c.differential();
  for (std::size_t x = 0; x < c.size(); ++x) {
    const auto& gx = c.generator(x);
    for (std::size_t y = 0; y < c.size(); ++y) {
      const auto& entry = d(y, x);
      if (entry.is_zero()) continue;
      if (!entry.is_monomial()) {
        out.push_back({"monomial", entry_name(c, y, x) + " has non-monomial coefficient " + entry.to_string()});
        continue;
      }
      const int a = entry.exponent();
      const auto& gy = c.generator(y);
      if (gy.maslov - 2 * a != gx.maslov - 1) {
        std::ostringstream s;
        s << entry_name(c, y, x) << ": M(" << entry.to_string() << gy.id << ") = " << gy.maslov - 2 * a
          << ", expected " << gx.maslov - 1;
        out.push_back({"maslov", s.str()});
      }
      if (!filtration_le(gy.plane.translated(a), gx.plane)) {
        std::ostringstream s;
        const auto p = gy.plane.translated(a);
        s << entry_name(c, y, x) << ": target at (" << p.i << "," << p.j << ") exceeds (" << gx.plane.i << ","
          << gx.plane.j << ")";
        out.push_back({"filtration", s.str()});
      }
    }
  }
  const auto d2 = d * d;
  for (std::size_t x = 0; x < c.size(); ++x) {
    for (std::size_t y = 0; y < c.size(); ++y) {
      if (!d2(y, x).is_zero()) {
        out.push_back({"d_squared", "d^2(" + c.generator(x).id + ") contains " + d2(y, x).to_string() + " " +
                                        c.generator(y).id});
      }
    }
  }
  return out;
}

void require_valid(const FilteredComplex& c, std::string_view context) {
  const auto v = validate(c);
  if (v.empty()) return;
  std::string msg = std::string(context) + ": invalid complex";
  for (std::size_t k = 0; k < v.size() && k < 3; ++k) msg += "; " + v[k].rule + ": " + v[k].detail;
  throw InvalidArgument(msg);
}

std::vector<Violation> validate_map(const FilteredComplex& source, const FilteredComplex& target, const ChainMap& f,
                                    bool require_chain_map) {
  std::vector<Violation> out;
  if (f.matrix.rows() != target.size() || f.matrix.cols() != source.size()) {
    out.push_back({"shape", "map matrix does not match source/target sizes"});
    return out;
  }
  for (std::size_t x = 0; x < source.size(); ++x) {
    const auto& gx = source.generator(x);
    for (std::size_t y = 0; y < target.size(); ++y) {
      const auto& entry = f.matrix(y, x);
      if (entry.is_zero()) continue;
      const auto& gy = target.generator(y);
      const std::string name = "f(" + gx.id + ") -> " + gy.id;
      if (!entry.is_monomial()) {
        out.push_back({"monomial", name + " has non-monomial coefficient " + entry.to_string()});
        continue;
      }
      const int a = entry.exponent();
      if (gy.maslov - 2 * a != gx.maslov + f.maslov_shift) {
        out.push_back({"maslov", name + " breaks the grading shift " + std::to_string(f.maslov_shift)});
      }
      const Plane bound = f.kind == FiltrationKind::filtered ? gx.plane : gx.plane.transposed();
      if (!filtration_le(gy.plane.translated(a), bound)) {
        out.push_back({f.kind == FiltrationKind::filtered ? "filtration" : "skew_filtration",
                       name + " (" + entry.to_string() + ") exceeds the allowed level"});
      }
    }
  }
  if (require_chain_map) {
    const auto lhs = target.differential() * f.matrix;
    const auto rhs = f.matrix * source.differential();
    for (std::size_t x = 0; x < source.size(); ++x) {
      for (std::size_t y = 0; y < target.size(); ++y) {
        if (lhs(y, x) != rhs(y, x)) {
          out.push_back({"chain_map", "d f and f d differ at (" + target.generator(y).id + ", " +
                                          source.generator(x).id + ")"});
        }
      }
    }
  }
  return out;
}

// --- builders ----------------------------------------------------------------

int staircase_n(std::span<const int> steps) {
  int n = 0;
  for (std::size_t k = 0; k < steps.size(); k += 2) n += steps[k];
  return n;
}

namespace {

std::string z_id(int r, int branch) { return "z" + std::to_string(r) + "^" + std::to_string(branch); }

FilteredComplex negative_staircase(std::span<const int> steps) {
  if (steps.empty()) throw InvalidArgument("staircase needs at least one step");
  for (int s : steps) {
    if (s <= 0) throw InvalidArgument("staircase step lengths must be positive");
  }
  const int v = static_cast<int>(steps.size());
  std::vector<Plane> pos(v + 1);
  for (int r = 1; r <= v; ++r) {
    const int position_from_outer = v - r + 1;  // 1-based
    const int len = steps[v - r];
    pos[r] = pos[r - 1];
    if (position_from_outer % 2 == 1) {
      pos[r].j += len;
    } else {
      pos[r].i -= len;
    }
  }
  // z_r with r = v (mod 2) emit arrows to their neighbours.
  auto emits = [v](int r) { return (v - r) % 2 == 0; };
  auto grade = [&](int r) { return emits(r) ? (emits(0) ? 0 : 1) : (emits(0) ? -1 : 0); };

  ComplexBuilder b;
  b.add("z0", grade(0), pos[0]);
  for (int r = 1; r <= v; ++r) {
    b.add(z_id(r, 1), grade(r), pos[r]);
    b.add(z_id(r, 2), grade(r), pos[r].transposed());
  }
  auto id = [](int r, int branch) { return r == 0 ? std::string("z0") : z_id(r, branch); };
  for (int r = 1; r <= v; ++r) {
    for (int branch = 1; branch <= 2; ++branch) {
      if (emits(r)) {
        b.arrow(id(r, branch), id(r - 1, branch));
      } else {
        b.arrow(id(r - 1, branch), id(r, branch));
      }
    }
  }
  return normalize_maslov(b.build());
}

}  // namespace

FilteredComplex build_staircase(StaircaseSign sign, std::span<const int> steps) {
  auto neg = negative_staircase(steps);
  return sign == StaircaseSign::negative ? neg : dualize(neg);
}

FilteredComplex build_box(Plane corner, int bottom_maslov, std::string_view suffix) {
  const std::string s(suffix);
  const int k = bottom_maslov;
  return ComplexBuilder{}
      .add("a" + s, k + 2, {corner.i + 1, corner.j + 1})
      .add("b" + s, k + 1, {corner.i, corner.j + 1})
      .add("c" + s, k + 1, {corner.i + 1, corner.j})
      .add("e" + s, k + 2, {corner.i + 1, corner.j + 1})
      .arrow("a" + s, "b" + s)
      .arrow("a" + s, "c" + s)
      .arrow("b" + s, "e" + s, 1)
      .arrow("c" + s, "e" + s, 1)
      .build();
}

FilteredComplex build_box(Plane corner, std::string_view suffix) {
  return build_box(corner, corner.i + corner.j, suffix);
}

LSpaceStaircase build_lspace_staircase(std::span<const int> exponents) {
  if (exponents.empty()) throw InvalidArgument("need at least one Alexander exponent");
  int prev = 0;
  for (int w : exponents) {
    if (w <= prev) throw InvalidArgument("Alexander exponents must be positive and strictly increasing");
    prev = w;
  }
  const std::size_t v = exponents.size();
  std::vector<int> steps(v);
  for (std::size_t k = 0; k < v; ++k) {
    const int len = exponents[k] - (k == 0 ? 0 : exponents[k - 1]);
    steps[v - 1 - k] = len;
  }
  int n = 0;
  for (std::size_t k = 0; k < v; ++k) n += (k % 2 == 0 ? 1 : -1) * exponents[v - 1 - k];
  return {build_staircase(StaircaseSign::positive, steps), n};
}

FilteredComplex dualize(const FilteredComplex& c) {
  std::vector<Generator> gens;
  gens.reserve(c.size());
  for (const auto& g : c.generators()) gens.push_back({g.id, -g.maslov, {-g.plane.i, -g.plane.j}});
  return {std::move(gens), c.differential().transposed()};
}

FilteredComplex direct_sum(std::span<const FilteredComplex> parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<Generator> gens;
  gens.reserve(total);
  LaurentMatrix diff(total, total);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (const auto& g : p.generators()) gens.push_back(g);
    for (std::size_t r = 0; r < p.size(); ++r) {
      for (std::size_t col = 0; col < p.size(); ++col) diff(offset + r, offset + col) = p.differential()(r, col);
    }
    offset += p.size();
  }
  return {std::move(gens), std::move(diff)};
}

FilteredComplex shift_maslov(const FilteredComplex& c, int delta) {
  auto gens = c.generators();
  for (auto& g : gens) g.maslov += delta;
  return {std::move(gens), c.differential()};
}

FilteredComplex normalize_maslov(const FilteredComplex& c) {
  const auto slice = to_f2(subquotient(c, Region::i_equals_0()));
  const auto dims = f2::homology_dims({slice.gradings, slice.entries});
  int total = 0;
  for (const auto& [g, d] : dims) total += d;
  if (total != 1) {
    throw StructuralError("vertical homology has rank " + std::to_string(total) + ", expected 1");
  }
  return shift_maslov(c, -dims.begin()->first);
}

// --- directional pieces ----------------------------------------------------------

Drop entry_drop(const FilteredComplex& c, std::size_t target, std::size_t source, int upower) {
  const auto& x = c.generator(source).plane;
  const auto& y = c.generator(target).plane.translated(upower);
  return {x.i - y.i, x.j - y.j};
}

namespace {

template <class Keep>
ChainMap filter_diff(const FilteredComplex& c, Keep keep) {
  ChainMap out{LaurentMatrix(c.size(), c.size()), FiltrationKind::filtered, -1};
  const auto& d = c.differential();
  for (std::size_t x = 0; x < c.size(); ++x) {
    for (std::size_t y = 0; y < c.size(); ++y) {
      const auto& e = d(y, x);
      if (e.is_zero()) continue;
      if (keep(entry_drop(c, y, x, e.exponent()))) out.matrix(y, x) = e;
    }
  }
  return out;
}

bool odd(int k) { return k % 2 != 0; }

}  // namespace

ChainMap directional_diff(const FilteredComplex& c, Direction dir) {
  if (dir == Direction::vertical) return filter_diff(c, [](Drop d) { return d.i == 0; });
  return filter_diff(c, [](Drop d) { return d.j == 0; });
}

PhiPsi phi_psi(const FilteredComplex& c) {
  return {filter_diff(c, [](Drop d) { return odd(d.i); }), filter_diff(c, [](Drop d) { return odd(d.j); })};
}

ChainMap sarkar(const FilteredComplex& c) {
  const auto [phi, psi] = phi_psi(c);
  auto m = phi.matrix * psi.matrix;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t col = 0; col < m.cols(); ++col) {
      if (!m(r, col).is_zero()) m(r, col) = m(r, col).shifted(-1);
    }
  }
  return {LaurentMatrix::identity(c.size()) + m, FiltrationKind::filtered, 0};
}

// --- subquotients -------------------------------------------------------------

std::string basis_label(const FilteredComplex& c, const BasisElement& b) {
  return power_prefix(b.upower) + c.generator(b.generator).id;
}

SubquotientComplex subquotient(const FilteredComplex& c, Region region) {
  SubquotientComplex sq;
  sq.region = region;
  std::vector<std::optional<std::size_t>> slot(c.size());
  for (std::size_t x = 0; x < c.size(); ++x) {
    const auto& g = c.generator(x);
    int k = 0;
    switch (region.kind) {
      case RegionKind::a0_minus:
        k = std::max(g.plane.i, g.plane.j);
        break;
      case RegionKind::b0_minus:
      case RegionKind::i_equals_0:
        k = g.plane.i;
        break;
      case RegionKind::i0_j_w:
        k = g.plane.i;
        if (g.plane.j - g.plane.i != region.w) continue;
        break;
    }
    slot[x] = sq.basis.size();
    sq.basis.push_back({x, k});
    sq.gradings.push_back(g.maslov - 2 * k);
    sq.labels.push_back(basis_label(c, sq.basis.back()));
  }
  const bool slice = region.kind == RegionKind::i_equals_0 || region.kind == RegionKind::i0_j_w;
  sq.diff = PolyMatrix(sq.basis.size(), sq.basis.size());
  const auto& d = c.differential();
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (!slot[x]) continue;
    for (std::size_t y = 0; y < c.size(); ++y) {
      const auto& e = d(y, x);
      if (e.is_zero() || !slot[y]) continue;
      const int power = sq.basis[*slot[x]].upower + e.exponent() - sq.basis[*slot[y]].upower;
      if (power < 0) {
        throw InvalidArgument("restriction of " + entry_name(c, y, x) + " has a negative U-power");
      }
      if (slice && power != 0) continue;
      sq.diff(*slot[y], *slot[x]) += UPoly::monomial(power);
    }
  }
  return sq;
}

PolyMatrix restrict_map(const LaurentMatrix& f, const SubquotientComplex& source, const SubquotientComplex& target) {
  std::map<std::size_t, std::size_t> target_slot;
  for (std::size_t k = 0; k < target.basis.size(); ++k) target_slot[target.basis[k].generator] = k;
  PolyMatrix out(target.basis.size(), source.basis.size());
  for (std::size_t s = 0; s < source.basis.size(); ++s) {
    const auto x = source.basis[s].generator;
    for (std::size_t y = 0; y < f.rows(); ++y) {
      const auto& e = f(y, x);
      if (e.is_zero()) continue;
      auto it = target_slot.find(y);
      if (it == target_slot.end()) throw InvalidArgument("map leaves the target region");
      const int power = source.basis[s].upower + e.exponent() - target.basis[it->second].upower;
      if (power < 0) throw InvalidArgument("map leaves the target region (negative U-power)");
      out(it->second, s) += UPoly::monomial(power);
    }
  }
  return out;
}

F2Slice to_f2(const SubquotientComplex& sq) {
  F2Slice out{sq.gradings, {}};
  for (std::size_t r = 0; r < sq.diff.rows(); ++r) {
    for (std::size_t col = 0; col < sq.diff.cols(); ++col) {
      const auto& e = sq.diff(r, col);
      if (e.is_zero()) continue;
      if (!e.is_one()) throw InvalidArgument("slice differential has a non-constant entry");
      out.entries.emplace_back(r, col);
    }
  }
  return out;
}

}  // namespace cfk
