#include "cfk/homology.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "cfk/error.hpp"
#include "cfk/f2.hpp"
#include "cfk/snf.hpp"

namespace cfk {

bool ClassCoordinates::is_zero() const {
  auto zero = [](const UPoly& p) { return p.is_zero(); };
  return std::all_of(free.begin(), free.end(), zero) && std::all_of(torsion.begin(), torsion.end(), zero);
}

std::optional<int> homogeneous_grading(const std::vector<int>& gradings, const Vector& v) {
  std::optional<int> g;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    if (!v[k].is_monomial()) throw StructuralError("vector entry " + v[k].to_string() + " is not a monomial");
    const int here = gradings[k] - 2 * v[k].degree();
    if (g && *g != here) throw StructuralError("vector is not homogeneous");
    g = here;
  }
  return g;
}

namespace {

PolyMatrix block(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  PolyMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows[r], cols[c]);
  }
  return out;
}

Vector embed(const Vector& local, const std::vector<std::size_t>& members, std::size_t size) {
  Vector out(size);
  for (std::size_t k = 0; k < members.size(); ++k) out[members[k]] = local[k];
  return out;
}

int parity(int g) { return ((g % 2) + 2) % 2; }

}  // namespace

UHomology::UHomology(std::vector<int> gradings, PolyMatrix diff) : gradings_(std::move(gradings)), diff_(std::move(diff)) {
  const std::size_t n = gradings_.size();
  if (diff_.rows() != n || diff_.cols() != n) throw InvalidArgument("differential shape does not match gradings");
  if (!(diff_ * diff_).is_zero()) throw StructuralError("differential does not square to zero");

  for (std::size_t k = 0; k < n; ++k) pieces_[parity(gradings_[k])].members.push_back(k);

  // Candidate summands before sorting: (grading, is_free, parity, local slot, order, representative).
  struct Candidate {
    int grading;
    bool free;
    int par;
    std::size_t slot;
    int order;
    Vector rep;
  };
  std::vector<Candidate> found;

  for (int p = 0; p < 2; ++p) {
    auto& piece = pieces_[p];
    const auto& own = piece.members;
    const auto& other = pieces_[1 - p].members;
    const auto in = snf(block(diff_, own, other));
    piece.left = in.left;
    piece.incoming_diagonal = in.diagonal;
    piece.incoming_rank = in.rank();
    const std::size_t r_in = piece.incoming_rank;

    const auto moved = block(diff_, other, own) * in.left_inverse;
    PolyMatrix kernel_block(other.size(), own.size() - r_in);
    for (std::size_t r = 0; r < other.size(); ++r) {
      for (std::size_t c = 0; c < own.size(); ++c) {
        if (c < r_in) {
          if (!moved(r, c).is_zero()) throw StructuralError("boundary has a nonzero differential");
        } else {
          kernel_block(r, c - r_in) = moved(r, c);
        }
      }
    }
    const auto out = snf(kernel_block);
    piece.kernel_right_inverse = out.right_inverse;
    piece.outgoing_rank = out.rank();

    for (std::size_t k = 0; k < r_in; ++k) {
      const auto& d = in.diagonal[k];
      if (d.is_one()) continue;
      if (!d.is_monomial()) throw StructuralError("non-monomial invariant factor " + d.to_string());
      Vector local(own.size());
      for (std::size_t r = 0; r < own.size(); ++r) local[r] = in.left_inverse(r, k);
      auto rep = embed(local, own, n);
      const auto g = homogeneous_grading(gradings_, rep);
      found.push_back({*g, false, p, k, d.degree(), std::move(rep)});
    }
    for (std::size_t j = piece.outgoing_rank; j < own.size() - r_in; ++j) {
      Vector local(own.size());
      for (std::size_t r = 0; r < own.size(); ++r) {
        for (std::size_t c = r_in; c < own.size(); ++c) {
          const auto& x = out.right(c - r_in, j);
          if (!x.is_zero() && !in.left_inverse(r, c).is_zero()) local[r] += in.left_inverse(r, c) * x;
        }
      }
      auto rep = embed(local, own, n);
      const auto g = homogeneous_grading(gradings_, rep);
      found.push_back({*g, true, p, j, 0, std::move(rep)});
    }
  }

  // Deterministic order: highest grading first, then larger torsion order.
  std::stable_sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(b.grading, b.order) < std::tie(a.grading, a.order);
  });
  for (int p = 0; p < 2; ++p) {
    auto& piece = pieces_[p];
    piece.torsion_index.assign(piece.incoming_rank, SIZE_MAX);
    piece.free_index.assign(piece.members.size() - piece.incoming_rank, SIZE_MAX);
  }
  for (auto& c : found) {
    auto& piece = pieces_[c.par];
    if (c.free) {
      piece.free_index[c.slot] = module_.free.size();
      module_.free.push_back({c.grading, std::move(c.rep)});
    } else {
      piece.torsion_index[c.slot] = module_.torsion.size();
      module_.torsion.push_back({c.grading, c.order, std::move(c.rep)});
    }
  }
}

bool UHomology::is_cycle(const Vector& v) const {
  if (v.size() != chain_rank()) return false;
  for (const auto& x : diff_ * v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

ClassCoordinates UHomology::coordinates(const Vector& cycle) const {
  if (!is_cycle(cycle)) throw InvalidArgument("vector is not a cycle");
  ClassCoordinates out;
  out.free.resize(module_.free.size());
  out.torsion.resize(module_.torsion.size());
  for (const auto& piece : pieces_) {
    Vector local(piece.members.size());
    for (std::size_t k = 0; k < piece.members.size(); ++k) local[k] = cycle[piece.members[k]];
    const auto moved = piece.left * local;
    for (std::size_t k = 0; k < piece.incoming_rank; ++k) {
      const auto idx = piece.torsion_index[k];
      if (idx == SIZE_MAX) continue;  // unit invariant factor: always a boundary
      out.torsion[idx] = divmod(moved[k], piece.incoming_diagonal[k]).remainder;
    }
    Vector rest(moved.begin() + static_cast<std::ptrdiff_t>(piece.incoming_rank), moved.end());
    const auto y = piece.kernel_right_inverse * rest;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (j < piece.outgoing_rank) {
        if (!y[j].is_zero()) throw StructuralError("cycle has a component outside the kernel");
        continue;
      }
      out.free[piece.free_index[j]] = y[j];
    }
  }
  return out;
}

UHomology homology_over_u(const SubquotientComplex& sq) {
  if (sq.region.kind != RegionKind::a0_minus && sq.region.kind != RegionKind::b0_minus) {
    throw InvalidArgument("homology over F[U] needs the A0- or B0- region");
  }
  return {sq.gradings, sq.diff};
}

PolyMatrix induced_map(const PolyMatrix& f, const UHomology& source, const UHomology& target) {
  if (f.rows() != target.chain_rank() || f.cols() != source.chain_rank()) {
    throw InvalidArgument("map shape does not match the complexes");
  }
  const auto& src = source.module();
  const std::size_t nf = target.module().free.size();
  PolyMatrix out(target.summand_count(), source.summand_count());
  auto fill = [&](std::size_t col, const Vector& rep) {
    const auto image = f * rep;
    if (!target.is_cycle(image)) throw InvalidArgument("map does not commute with the differentials");
    const auto coords = target.coordinates(image);
    for (std::size_t k = 0; k < coords.free.size(); ++k) out(k, col) = coords.free[k];
    for (std::size_t k = 0; k < coords.torsion.size(); ++k) out(nf + k, col) = coords.torsion[k];
  };
  for (std::size_t k = 0; k < src.free.size(); ++k) fill(k, src.free[k].representative);
  for (std::size_t k = 0; k < src.torsion.size(); ++k) fill(src.free.size() + k, src.torsion[k].representative);
  return out;
}

namespace {

int specialized_rank(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& entries) {
  return f2::total_homology_dim(n, entries);
}

}  // namespace

int localized_rank(const LaurentMatrix& diff) {
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t r = 0; r < diff.rows(); ++r) {
    for (std::size_t c = 0; c < diff.cols(); ++c) {
      if (!diff(r, c).is_zero() && diff(r, c).poly().exponents().size() % 2 == 1) entries.emplace_back(r, c);
    }
  }
  return specialized_rank(diff.rows(), entries);
}

int localized_rank(const PolyMatrix& diff) {
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t r = 0; r < diff.rows(); ++r) {
    for (std::size_t c = 0; c < diff.cols(); ++c) {
      if (!diff(r, c).is_zero() && diff(r, c).exponents().size() % 2 == 1) entries.emplace_back(r, c);
    }
  }
  return specialized_rank(diff.rows(), entries);
}

int vertical_homology_rank(const FilteredComplex& c) {
  return localized_rank(directional_diff(c, Direction::vertical).matrix);
}

int horizontal_homology_rank(const FilteredComplex& c) {
  return localized_rank(directional_diff(c, Direction::horizontal).matrix);
}

int v0(const FilteredComplex& c) {
  const auto h = homology_over_u(subquotient(c, Region::a0_minus()));
  const auto& free = h.module().free;
  if (free.size() != 1) {
    throw StructuralError("H(A0-) has " + std::to_string(free.size()) + " towers, expected 1");
  }
  if (free[0].grading % 2 != 0) throw StructuralError("tower of H(A0-) sits in odd grading");
  return -free[0].grading / 2;
}

HfkTable hfk_hat(const FilteredComplex& c) {
  std::set<int> ws;
  for (const auto& g : c.generators()) ws.insert(g.plane.j - g.plane.i);
  HfkTable out;
  for (int w : ws) {
    const auto slice = to_f2(subquotient(c, Region::i0_j_w(w)));
    for (const auto& [k, d] : f2::homology_dims({slice.gradings, slice.entries})) out[{w, k}] = d;
  }
  return out;
}

AlexanderPoly alexander_poly(const HfkTable& hfk) {
  AlexanderPoly out;
  for (const auto& [wk, rank] : hfk) {
    const auto [w, k] = wk;
    out[w] += (parity(k) == 0 ? 1 : -1) * static_cast<long long>(rank);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

AlexanderPoly alexander_poly(const FilteredComplex& c) { return alexander_poly(hfk_hat(c)); }

int genus(const HfkTable& hfk) {
  std::optional<int> best;
  for (const auto& [wk, rank] : hfk) {
    if (rank != 0 && (!best || wk.first > *best)) best = wk.first;
  }
  if (!best) throw StructuralError("knot Floer homology is zero");
  return *best;
}

int genus_detect(const FilteredComplex& c) { return genus(hfk_hat(c)); }

}  // namespace cfk
