#include "artinforge/linalg.hpp"

#include "artinforge/error.hpp"

namespace artinforge {

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorCode::Dimension, "matrix shapes do not chain");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::Dimension, "vector length mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

RationalMatrix RationalMatrix::stacked(const RationalMatrix& other) const {
  if (rows_ != 0 && other.rows_ != 0 && cols_ != other.cols_)
    throw Error(ErrorCode::Dimension, "cannot stack matrices of different width");
  const std::size_t cols = rows_ != 0 ? cols_ : other.cols_;
  RationalMatrix out(rows_ + other.rows_, cols);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < other.rows_; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(rows_ + i, j) = other(i, j);
  return out;
}

namespace {

struct Echelon {
  std::vector<std::vector<mpz_class>> rows;  // nonzero rows only
  std::vector<std::size_t> pivots;           // pivot column per row
};

Echelon fraction_free_echelon(const RationalMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<mpz_class>> rows(m, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < m; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class scaled = a(i, j).get_num() * (lcm / a(i, j).get_den());
      rows[i][j] = std::move(scaled);
    }
  }

  Echelon e;
  mpz_class previous = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t pivot = r;
    while (pivot < m && rows[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        mpz_class v = rows[r][col] * rows[i][j] - rows[i][col] * rows[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        rows[i][j] = std::move(v);
      }
      rows[i][col] = 0;
    }
    previous = rows[r][col];
    e.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

}  // namespace

std::vector<RationalVector> nullspace(const RationalMatrix& a) {
  const std::size_t n = a.cols();
  Echelon e = fraction_free_echelon(a);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(n);
    v[free] = 1;
    for (std::size_t k = e.rows.size(); k-- > 0;) {
      const std::size_t p = e.pivots[k];
      Rational s = 0;
      for (std::size_t j = p + 1; j < n; ++j)
        if (e.rows[k][j] != 0 && v[j] != 0) s += Rational(e.rows[k][j]) * v[j];
      v[p] = -s / Rational(e.rows[k][p]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RationalMatrix& a) { return fraction_free_echelon(a).rows.size(); }

}  // namespace artinforge
