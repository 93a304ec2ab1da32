#pragma once

#include <cstddef>
#include <vector>

#include "artinforge/polynomial.hpp"

namespace artinforge {

using RationalVector = std::vector<Rational>;

/// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalVector apply(const RationalVector& v) const;

  // Rows of `other` appended below.
  RationalMatrix stacked(const RationalMatrix& other) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Basis of {v : A v = 0}. Rows are cleared to integers and brought to echelon
/// form by fraction-free (Bareiss) elimination; each basis vector has a 1 in
/// its free column and zeros in the other free columns.
std::vector<RationalVector> nullspace(const RationalMatrix& a);

std::size_t rank(const RationalMatrix& a);

}  // namespace artinforge
