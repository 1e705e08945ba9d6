#include "cfk/f2.hpp"

#include <bit>
#include <set>

namespace cfk::f2 {

bool BitVector::any() const {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t BitVector::lowest() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return size_;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool EchelonBasis::insert(BitVector v) {
  v = reduce(std::move(v));
  if (!v.any()) return false;
  const auto pivot = v.lowest();
  // Keep every stored row reduced at the new pivot so reduce() is one pass.
  for (auto& [p, row] : rows_) {
    if (row.get(pivot)) row ^= v;
  }
  rows_.emplace_back(pivot, std::move(v));
  return true;
}

BitVector EchelonBasis::reduce(BitVector v) const {
  for (const auto& [p, row] : rows_) {
    if (v.get(p)) v ^= row;
  }
  return v;
}

std::size_t rank(std::vector<BitVector> rows) {
  if (rows.empty()) return 0;
  EchelonBasis basis(rows.front().size());
  std::size_t r = 0;
  for (auto& row : rows) {
    if (basis.insert(std::move(row))) ++r;
  }
  return r;
}

std::map<int, int> homology_dims(const GradedComplex& c) {
  // Split by grading: index of each generator inside its graded piece.
  std::map<int, std::vector<std::size_t>> by_grading;
  std::vector<std::size_t> local(c.gradings.size());
  for (std::size_t k = 0; k < c.gradings.size(); ++k) {
    auto& bucket = by_grading[c.gradings[k]];
    local[k] = bucket.size();
    bucket.push_back(k);
  }
  // Rank of the differential leaving each grading.
  std::map<int, std::vector<BitVector>> columns;
  for (const auto& [g, members] : by_grading) {
    auto target = by_grading.find(g - 1);
    const std::size_t target_dim = target == by_grading.end() ? 0 : target->second.size();
    columns[g].assign(members.size(), BitVector(target_dim));
  }
  for (const auto& [t, s] : c.entries) {
    columns[c.gradings[s]][local[s]].flip(local[t]);
  }
  std::map<int, int> ranks;
  for (auto& [g, cols] : columns) ranks[g] = static_cast<int>(rank(std::move(cols)));

  std::map<int, int> dims;
  for (const auto& [g, members] : by_grading) {
    const int out_rank = ranks[g];
    const auto in = ranks.find(g + 1);
    const int in_rank = in == ranks.end() ? 0 : in->second;
    const int h = static_cast<int>(members.size()) - out_rank - in_rank;
    if (h != 0) dims[g] = h;
  }
  return dims;
}

int total_homology_dim(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& entries) {
  std::vector<BitVector> cols(size, BitVector(size));
  for (const auto& [t, s] : entries) cols[s].flip(t);
  return static_cast<int>(size) - 2 * static_cast<int>(rank(std::move(cols)));
}

}  // namespace cfk::f2
