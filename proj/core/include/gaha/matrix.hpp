#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaha/rational.hpp"

namespace gaha {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : r_(rows), c_(cols), a_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.r_; ++i) {
      if (rows[i].size() != m.c_) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const T& x = a(i, k);
        if (is_zero(x)) continue;
        for (std::size_t j = 0; j < b.c_; ++j)
          if (!is_zero(b(k, j))) m(i, j) += x * b(k, j);
      }
    return m;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != c_) throw std::invalid_argument("vector length mismatch");
    std::vector<T> out(r_, T(0));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        if (!is_zero(a_[i * c_ + j]) && !is_zero(v[j])) out[i] += a_[i * c_ + j] * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  Matrix transpose() const {
    Matrix m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }
  // conjugate transpose; plain transpose over Q
  Matrix adjoint() const {
    Matrix m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(j, i) = conj((*this)(i, j));
    return m;
  }

  bool is_zero_matrix() const {
    for (const auto& x : a_)
      if (!is_zero(x)) return false;
    return true;
  }
  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
  }

  const std::vector<T>& data() const { return a_; }

 private:
  void check_same(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
  }
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;
using GMatrix = Matrix<GaussRational>;

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

inline GMatrix to_gauss(const QMatrix& m) {
  GMatrix g(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g(i, j) = GaussRational(m(i, j));
  return g;
}

// throws when an entry has nonzero imaginary part
QMatrix real_part_checked(const GMatrix& m);

std::string to_string(const QMatrix& m);

}  // namespace gaha
