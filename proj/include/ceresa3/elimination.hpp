#pragma once

#include "ceresa3/matrix.hpp"

#include <optional>
#include <vector>

namespace ceresa3 {

/// Row chosen as pivot within a column during elimination.
enum class PivotRule { first_nonzero, last_nonzero };

template <ExactField T>
struct Echelon {
  Matrix<T> rref;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  T det_factor{1};                   // product of pivots times row-swap signs
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <ExactField T>
Echelon<T> row_reduce(Matrix<T> m, PivotRule rule = PivotRule::first_nonzero) {
  Echelon<T> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::optional<std::size_t> pivot;
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      pivot = r;
      if (rule == PivotRule::first_nonzero) break;
    }
    if (!pivot) continue;
    if (*pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(*pivot, j));
      out.det_factor = -out.det_factor;
    }
    const T p = m(row, col);
    out.det_factor = out.det_factor * p;
    const T inv = p.inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const T factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (m(row, j).is_zero()) continue;
        m(r, j) = m(r, j) - factor * m(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rref = std::move(m);
  return out;
}

template <ExactField T>
std::size_t rank(const Matrix<T>& m, PivotRule rule = PivotRule::first_nonzero) {
  return row_reduce(m, rule).pivots.size();
}

/// Columns form a basis of the null space, one per free column of the RREF.
template <ExactField T>
Matrix<T> kernel_basis(const Matrix<T>& m) {
  const auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  Matrix<T> basis(m.cols(), m.cols() - ech.pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = T(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) basis(ech.pivots[r], k) = -ech.rref(r, free);
    ++k;
  }
  return basis;
}

/// Columns of m at the pivot positions; a basis of the column space.
template <ExactField T>
Matrix<T> image_basis(const Matrix<T>& m) {
  const auto ech = row_reduce(m);
  Matrix<T> basis(m.rows(), ech.pivots.size());
  for (std::size_t k = 0; k < ech.pivots.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) basis(i, k) = m(i, ech.pivots[k]);
  return basis;
}

template <ExactField T>
T determinant(const Matrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const auto ech = row_reduce(m);
  if (ech.pivots.size() < m.rows()) return T(0);
  return ech.det_factor;
}

/// Throws std::domain_error when m is singular.
template <ExactField T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  const auto ech = row_reduce(hstack(m, Matrix<T>::identity(n)));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) {
    throw std::domain_error("matrix is not invertible");
  }
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.rref(i, n + j);
  return inv;
}

/// True when every column of `vectors` lies in the column span of `span`.
template <ExactField T>
bool in_column_span(const Matrix<T>& span, const Matrix<T>& vectors) {
  return rank(hstack(span, vectors)) == rank(span);
}

}  // namespace ceresa3
