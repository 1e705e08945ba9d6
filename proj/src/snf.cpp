#include "cfk/snf.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace cfk {

std::size_t SnfResult::rank() const {
  return static_cast<std::size_t>(
      std::count_if(diagonal.begin(), diagonal.end(), [](const UPoly& d) { return !d.is_zero(); }));
}

namespace {

struct Workspace {
  PolyMatrix d;
  PolyMatrix left, left_inv, right, right_inv;

  void swap_rows(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    left.swap_rows(a, b);
    left_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    right.swap_cols(a, b);
    right_inv.swap_rows(a, b);
  }
  // row[target] += q * row[source]; the inverse op is identical over F2.
  void add_row(std::size_t target, std::size_t source, const UPoly& q) {
    d.add_row_multiple(target, source, q);
    left.add_row_multiple(target, source, q);
    left_inv.add_col_multiple(source, target, q);
  }
  void add_col(std::size_t target, std::size_t source, const UPoly& q) {
    d.add_col_multiple(target, source, q);
    right.add_col_multiple(target, source, q);
    right_inv.add_row_multiple(source, target, q);
  }
};

struct Position {
  std::size_t row, col;
};

std::optional<Position> min_degree_entry(const PolyMatrix& d, std::size_t start) {
  std::optional<Position> best;
  int best_degree = 0;
  for (std::size_t r = start; r < d.rows(); ++r) {
    for (std::size_t c = start; c < d.cols(); ++c) {
      const auto& x = d(r, c);
      if (x.is_zero()) continue;
      if (!best || x.degree() < best_degree) {
        best = Position{r, c};
        best_degree = x.degree();
      }
    }
  }
  return best;
}

}  // namespace

SnfResult snf(const PolyMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Workspace w{m, PolyMatrix::identity(rows), PolyMatrix::identity(rows), PolyMatrix::identity(cols),
              PolyMatrix::identity(cols)};

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      const auto pivot = min_degree_entry(w.d, t);
      if (!pivot) break;
      w.swap_rows(t, pivot->row);
      w.swap_cols(t, pivot->col);
      const UPoly p = w.d(t, t);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (w.d(r, t).is_zero()) continue;
        auto [q, rem] = divmod(w.d(r, t), p);
        w.add_row(r, t, q);
        if (!rem.is_zero()) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (w.d(t, c).is_zero()) continue;
        auto [q, rem] = divmod(w.d(t, c), p);
        w.add_col(c, t, q);
        if (!rem.is_zero()) clean = false;
      }
      if (!clean) continue;

      // Divisibility chain: the pivot must divide every remaining entry.
      std::optional<std::size_t> offending_row;
      for (std::size_t r = t + 1; r < rows && !offending_row; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (!w.d(r, c).is_zero() && !divmod(w.d(r, c), p).remainder.is_zero()) {
            offending_row = r;
            break;
          }
        }
      }
      if (!offending_row) break;
      w.add_row(t, *offending_row, UPoly::one());
    }
  }

  SnfResult out;
  out.diagonal.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal.push_back(w.d(t, t));
  out.left = std::move(w.left);
  out.right = std::move(w.right);
  out.left_inverse = std::move(w.left_inv);
  out.right_inverse = std::move(w.right_inv);
  return out;
}

}  // namespace cfk
