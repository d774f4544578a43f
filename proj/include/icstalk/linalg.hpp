#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "icstalk/errors.hpp"
#include "icstalk/matrix.hpp"

namespace icstalk {

template <typename T>
struct RrefResult {
  Matrix<T> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination. The pivot in each column is the first row (from
/// the current pivot row down) with a nonzero entry.
template <typename T>
RrefResult<T> rref(Matrix<T> m) {
  RrefResult<T> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == T(0)) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == T(0)) continue;
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

/// Rank by forward elimination only (no back substitution).
template <typename T>
std::size_t rank(Matrix<T> m) {
  if (m.cols() > m.rows()) m = m.transpose();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == T(0)) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const T inv = T(1) / m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == T(0)) continue;
      const T f = m(i, c) * inv;
      for (std::size_t j = c + 1; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
      m(i, c) = T(0);
    }
    ++r;
  }
  return r;
}

/// Columns form a basis of {x : m x = 0}, one per free column of rref(m).
template <typename T>
Matrix<T> kernel_basis(const Matrix<T>& m) {
  const auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols());
    v[free] = T(1);
    for (std::size_t k = 0; k < red.rank; ++k) v[red.pivot_columns[k]] = -red.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return Matrix<T>::from_columns(m.cols(), basis);
}

/// The pivot columns of m, which form a basis of its column space.
template <typename T>
Matrix<T> column_space_basis(const Matrix<T>& m) {
  const auto red = rref(m);
  std::vector<std::vector<T>> cols;
  cols.reserve(red.rank);
  for (auto c : red.pivot_columns) cols.push_back(m.column(c));
  return Matrix<T>::from_columns(m.rows(), cols);
}

/// Solves basis * X = target for X, where the columns of `basis` are linearly
/// independent. Throws PreconditionError if some target column is outside
/// the span.
template <typename T>
Matrix<T> solve_in_basis(const Matrix<T>& basis, const Matrix<T>& target) {
  if (basis.rows() != target.rows()) throw InputError("solve_in_basis row mismatch");
  const std::size_t k = basis.cols();
  Matrix<T> aug(basis.rows(), k + target.cols());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = basis(i, j);
    for (std::size_t j = 0; j < target.cols(); ++j) aug(i, k + j) = target(i, j);
  }
  const auto red = rref(std::move(aug));
  if (red.rank != k) throw PreconditionError("target not in the span of the basis");
  for (std::size_t i = 0; i < red.rank; ++i)
    if (red.pivot_columns[i] != i) throw PreconditionError("target not in the span of the basis");
  Matrix<T> x(k, target.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < target.cols(); ++j) x(i, j) = red.reduced(i, k + j);
  return x;
}

template <typename T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  T det(1);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == T(0)) ++p;
    if (p == n) return T(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const T inv = T(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == T(0)) continue;
      const T f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

}  // namespace icstalk
