#pragma once

#include <cstddef>
#include <vector>

#include "nestfock/rational.hpp"

namespace nestfock {

// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatMatrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Scalar& s, const RatMatrix& a);

// Exact inverse. Triangular input is inverted by substitution. Otherwise rows
// are first scaled to integers, then eliminated with
// Bareiss' fraction-free scheme. Throws ConsistencyError when singular.
RatMatrix inverse(const RatMatrix& a);

}  // namespace nestfock
