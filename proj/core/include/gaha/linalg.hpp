#pragma once

#include <optional>
#include <vector>

#include "gaha/matrix.hpp"

namespace gaha {

template <class T>
struct Echelon {
  Matrix<T> R;                       // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

template <class T>
Echelon<T> rref(Matrix<T> m) {
  Echelon<T> e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    T inv = T(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      T f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.R = std::move(m);
  return e;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

// Basis of {x : m x = 0}; one vector per free column, with a 1 there.
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m) {
  Echelon<T> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[f] = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.R(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon<T> e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  std::vector<T> x(a.cols(), T(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.R(r, a.cols());
  return x;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
  if (!a.square()) return std::nullopt;
  std::size_t n = a.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = T(1);
  }
  Echelon<T> e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.R(i, n + j);
  return inv;
}

// Stack vectors as columns.
template <class T>
Matrix<T> from_columns(const std::vector<std::vector<T>>& cols, std::size_t nrows) {
  Matrix<T> m(nrows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
  return m;
}

// Determinant by elimination, for any exact field.
template <class T>
T det_generic(Matrix<T> m) {
  std::size_t n = m.rows();
  T d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return T(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    T inv = T(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      T f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

template <class T>
Matrix<T> principal_block(const Matrix<T>& m, std::size_t from, std::size_t to) {
  Matrix<T> b(to - from, to - from);
  for (std::size_t i = from; i < to; ++i)
    for (std::size_t j = from; j < to; ++j) b(i - from, j - from) = m(i, j);
  return b;
}

struct Inertia {
  std::size_t pos = 0, neg = 0, zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Exact congruence diagonalization. Throws on non-symmetric input.
Inertia signature(const QMatrix& sym);

Rational determinant(QMatrix m);

}  // namespace gaha
