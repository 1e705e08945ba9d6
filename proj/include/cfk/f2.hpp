#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace cfk::f2 {

/// Dense bit vector over F2.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t k) const { return (words_[k / 64] >> (k % 64)) & 1U; }
  void set(std::size_t k, bool value = true) {
    const auto mask = std::uint64_t{1} << (k % 64);
    if (value) {
      words_[k / 64] |= mask;
    } else {
      words_[k / 64] &= ~mask;
    }
  }
  void flip(std::size_t k) { words_[k / 64] ^= std::uint64_t{1} << (k % 64); }
  bool any() const;
  /// Index of the lowest set bit, or size() if none.
  std::size_t lowest() const;
  BitVector& operator^=(const BitVector& other);
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Rank of a set of vectors (consumes a copy).
std::size_t rank(std::vector<BitVector> rows);

/// Incremental echelon basis: supports membership tests and reduction.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}
  /// Adds v; returns false if v was already in the span.
  bool insert(BitVector v);
  /// Reduces v against the basis; the result is zero iff v is in the span.
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return !reduce(v).any(); }
  std::size_t size() const noexcept { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<std::pair<std::size_t, BitVector>> rows_;  // (pivot, row)
};

/// A finite Z-graded complex over F2: generator gradings plus the list of
/// (target, source) pairs with coefficient 1. The differential lowers grading
/// by one.
struct GradedComplex {
  std::vector<int> gradings;
  std::vector<std::pair<std::size_t, std::size_t>> entries;
};

/// Betti numbers per grading (only nonzero entries are kept).
std::map<int, int> homology_dims(const GradedComplex& c);

/// Total dimension of homology ignoring gradings (a Z/2-graded complex).
int total_homology_dim(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& entries);

}  // namespace cfk::f2
