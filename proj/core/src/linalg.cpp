#include "gaha/linalg.hpp"

#include <sstream>

namespace gaha {

QMatrix real_part_checked(const GMatrix& m) {
  QMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_real()) throw std::domain_error("matrix is not real: entry " + to_string(m(i, j)));
      r(i, j) = m(i, j).re;
    }
  return r;
}

std::string to_string(const QMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_string(m(i, j));
  }
  os << "]";
  return os.str();
}

Inertia signature(const QMatrix& sym) {
  if (!sym.square() || !(sym == sym.transpose())) throw std::invalid_argument("signature needs a symmetric matrix");
  QMatrix a = sym;
  std::size_t n = a.rows();
  Inertia in;
  std::size_t done = 0;  // a is block-diagonal on [0, done)

  auto swap_rc = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
  };
  // row_i += f row_j and col_i += f col_j
  auto add_rc = [&](std::size_t i, std::size_t j, const Rational& f) {
    for (std::size_t k = 0; k < n; ++k) a(i, k) += f * a(j, k);
    for (std::size_t k = 0; k < n; ++k) a(k, i) += f * a(k, j);
  };
  auto eliminate = [&](std::size_t p) {
    for (std::size_t i = p + 1; i < n; ++i)
      if (!is_zero(a(i, p))) add_rc(i, p, -a(i, p) / a(p, p));
  };

  while (done < n) {
    std::size_t p = done;
    while (p < n && is_zero(a(p, p))) ++p;
    if (p < n) {
      swap_rc(done, p);
      (sgn(a(done, done)) > 0 ? in.pos : in.neg)++;
      eliminate(done);
      ++done;
      continue;
    }
    // zero diagonal: look for an off-diagonal entry
    std::size_t i0 = n, j0 = n;
    for (std::size_t i = done; i < n && i0 == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!is_zero(a(i, j))) {
          i0 = i;
          j0 = j;
          break;
        }
    if (i0 == n) {
      in.zero += n - done;
      break;
    }
    // e_i + e_j has value 2 a_ij != 0; the 2x2 block [[0,b],[b,0]] splits as one + and one -
    add_rc(i0, j0, Rational(1));
  }
  return in;
}

Rational determinant(QMatrix m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

}  // namespace gaha
