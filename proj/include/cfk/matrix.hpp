#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cfk/ulaurent.hpp"
#include "cfk/upoly.hpp"

namespace cfk {

/// Dense row-major matrix over a ring with a zero default value and a
/// static T::one(). Products skip zero entries, which keeps the very sparse
/// differentials used here cheap.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T::one();
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  Matrix& operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("Matrix: shape mismatch in +");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in *");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(r, k);
        if (x.is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) {
          const T& y = b(k, c);
          if (y.is_zero()) continue;
          out(r, c) += x * y;
        }
      }
    }
    return out;
  }

  /// Matrix times column vector.
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("Matrix: shape mismatch in matrix*vector");
    std::vector<T> out(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(r, k).is_zero() || v[k].is_zero()) continue;
        out[r] += a(r, k) * v[k];
      }
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  // Elementary operations. Over F2 adding and subtracting coincide.
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const T& factor) {
    if (factor.is_zero()) return;
    for (std::size_t c = 0; c < cols_; ++c) {
      const T& x = (*this)(source, c);
      if (!x.is_zero()) (*this)(target, c) += factor * x;
    }
  }
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const T& factor) {
    if (factor.is_zero()) return;
    for (std::size_t r = 0; r < rows_; ++r) {
      const T& x = (*this)(r, source);
      if (!x.is_zero()) (*this)(r, target) += factor * x;
    }
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<UPoly>;
using LaurentMatrix = Matrix<ULaurent>;

}  // namespace cfk
