#pragma once

#include <cstddef>
#include <vector>

#include "aci/hilbert.hpp"

namespace aci {

// Dense row-major matrix of exact integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  friend IntegerMatrix operator*(const IntegerMatrix& lhs, const IntegerMatrix& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(IntegerMatrix m);

// Determinant by fraction-free elimination; m must be square.
Integer determinant(IntegerMatrix m);

}  // namespace aci
