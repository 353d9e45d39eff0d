#include "bott/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace bott {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch in product");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix m = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && m(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(m(rank, c), m(pivot, c));
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (m(r, col) == 0) continue;
      const Rational factor = m(r, col) / m(rank, col);
      for (std::size_t c = col; c < cols_; ++c) m(r, c) -= factor * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace bott
