#include "cfk/render.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace cfk {

namespace {

std::string power_label(int e) {
  if (e == 0) return "";
  if (e == 1) return "U";
  return "U^" + std::to_string(e);
}

}  // namespace

std::string to_dot(const FilteredComplex& c, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (const auto& g : c.generators()) {
    out << "  \"" << g.id << "\" [label=\"" << g.id << "\\nM=" << g.maslov << "\", pos=\"" << g.plane.i << ","
        << g.plane.j << "!\"];\n";
  }
  const auto& d = c.differential();
  for (std::size_t s = 0; s < c.size(); ++s) {
    for (std::size_t t = 0; t < c.size(); ++t) {
      const auto& e = d(t, s);
      if (e.is_zero()) continue;
      out << "  \"" << c.generator(s).id << "\" -> \"" << c.generator(t).id << "\"";
      const auto label = power_label(e.exponent());
      if (!label.empty()) out << " [label=\"" << label << "\"]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_ascii(const FilteredComplex& c, const std::vector<BoxMark>& boxes) {
  int imin = INT_MAX, imax = INT_MIN, jmin = INT_MAX, jmax = INT_MIN;
  auto extend = [&](int i, int j) {
    imin = std::min(imin, i);
    imax = std::max(imax, i);
    jmin = std::min(jmin, j);
    jmax = std::max(jmax, j);
  };
  for (const auto& g : c.generators()) extend(g.plane.i, g.plane.j);
  for (const auto& b : boxes) {
    extend(b.corner.i, b.corner.j);
    extend(b.corner.i + 1, b.corner.j + 1);
  }
  if (imin > imax) return "(empty)\n";

  // Doubled coordinates: lattice points at even offsets, box centres at odd.
  const int width = 2 * (imax - imin) + 1;
  const int height = 2 * (jmax - jmin) + 1;
  std::vector<std::string> grid(height, std::string(width, ' '));
  auto cell = [&](int x2, int y2) -> char& { return grid[height - 1 - (y2 - 2 * jmin)][x2 - 2 * imin]; };

  const auto& d = c.differential();
  for (std::size_t s = 0; s < c.size(); ++s) {
    for (std::size_t t = 0; t < c.size(); ++t) {
      const auto& e = d(t, s);
      if (e.is_zero() || e.exponent() != 0) continue;
      const auto a = c.generator(s).plane, b = c.generator(t).plane;
      if (a.j == b.j) {
        for (int x = 2 * std::min(a.i, b.i) + 1; x < 2 * std::max(a.i, b.i); ++x) cell(x, 2 * a.j) = '-';
      } else if (a.i == b.i) {
        for (int y = 2 * std::min(a.j, b.j) + 1; y < 2 * std::max(a.j, b.j); ++y) cell(2 * a.i, y) = '|';
      }
    }
  }
  for (const auto& g : c.generators()) cell(2 * g.plane.i, 2 * g.plane.j) = 'o';
  for (const auto& b : boxes) {
    const char digit = b.count >= 1 && b.count <= 9 ? static_cast<char>('0' + b.count) : '+';
    cell(2 * b.corner.i + 1, 2 * b.corner.j + 1) = digit;
  }

  std::ostringstream out;
  for (int row = 0; row < height; ++row) {
    const int y2 = 2 * jmax - row;
    std::string line = grid[row];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    if (y2 % 2 == 0) {
      std::string tag = std::to_string(y2 / 2);
      out << std::string(4 - std::min<std::size_t>(4, tag.size()), ' ') << tag << " ";
    } else {
      out << "     ";
    }
    out << line << "\n";
  }
  out << "     i from " << imin << " to " << imax << ", j from " << jmin << " to " << jmax << "\n";
  return out.str();
}

std::string describe(const GradedModule& m) {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << "  ";
    first = false;
  };
  for (const auto& f : m.free) {
    sep();
    out << "F(" << f.grading << ")[U]";
  }
  for (const auto& t : m.torsion) {
    sep();
    out << "F(" << t.grading << ")[U]/" << (t.order_exp == 1 ? std::string("U") : "U^" + std::to_string(t.order_exp));
  }
  if (first) out << "0";
  return out.str();
}

std::string describe_complex(const std::vector<std::string>& labels, const std::vector<int>& gradings,
                             const PolyMatrix& diff) {
  std::ostringstream out;
  for (std::size_t s = 0; s < labels.size(); ++s) {
    out << labels[s] << " [" << gradings[s] << "] ->";
    bool any = false;
    for (std::size_t t = 0; t < labels.size(); ++t) {
      const auto& e = diff(t, s);
      if (e.is_zero()) continue;
      out << (any ? " + " : " ");
      any = true;
      if (!e.is_one()) out << "(" << e.to_string() << ")";
      out << labels[t];
    }
    if (!any) out << " 0";
    out << "\n";
  }
  return out.str();
}

std::string describe_hfk(const HfkTable& t) {
  std::map<int, std::vector<std::pair<int, int>>> by_w;
  for (const auto& [wk, r] : t) by_w[wk.first].emplace_back(wk.second, r);
  std::ostringstream out;
  for (auto it = by_w.rbegin(); it != by_w.rend(); ++it) {
    out << "w=" << it->first << ":";
    for (const auto& [k, r] : it->second) out << " F^" << r << "(" << k << ")";
    out << "\n";
  }
  return out.str();
}

std::string describe_alexander(const AlexanderPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    const auto [e, coef] = *it;
    if (coef == 0) continue;
    const long long mag = coef < 0 ? -coef : coef;
    if (first) {
      if (coef < 0) out << "-";
    } else {
      out << (coef < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || e == 0) out << mag;
    if (e != 0) out << "t" << (e == 1 ? "" : "^" + std::to_string(e));
  }
  return out.str();
}

}  // namespace cfk
