#include "gaha/sparse.hpp"

#include <stdexcept>

namespace gaha {

void SparseSystem::reduce(SparseRow& row) const {
  auto it = row.begin();
  while (it != row.end()) {
    std::size_t col = it->first;
    std::size_t r = pivot_of_[col];
    if (r == npos) {
      ++it;
      continue;
    }
    // pivot rows are monic with nothing left of the pivot
    Rational f = it->second;
    for (const auto& [j, v] : rows_[r]) {
      Rational& x = row[j];
      x -= f * v;
      if (is_zero(x) && j != col) row.erase(j);
    }
    row.erase(col);
    it = row.upper_bound(col);
  }
}

bool SparseSystem::add(SparseRow row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->first >= n_) throw std::out_of_range("sparse row index out of range");
    it = is_zero(it->second) ? row.erase(it) : std::next(it);
  }
  reduce(row);
  if (row.empty()) return false;
  Rational inv = 1 / row.begin()->second;
  for (auto& [j, v] : row) v *= inv;
  pivot_of_[row.begin()->first] = rows_.size();
  rows_.push_back(std::move(row));
  return true;
}

std::vector<std::vector<Rational>> SparseSystem::nullspace() const {
  // fully reduce a copy, back to front
  std::vector<SparseRow> rr = rows_;
  std::vector<std::size_t> order;
  for (std::size_t c = 0; c < n_; ++c)
    if (pivot_of_[c] != npos) order.push_back(pivot_of_[c]);
  for (std::size_t k = order.size(); k-- > 0;) {
    SparseRow& row = rr[order[k]];
    for (auto it = std::next(row.begin()); it != row.end();) {
      std::size_t r2 = pivot_of_[it->first];
      if (r2 == npos) {
        ++it;
        continue;
      }
      Rational f = it->second;
      std::size_t col = it->first;
      for (const auto& [j, v] : rr[r2]) {
        Rational& x = row[j];
        x -= f * v;
        if (is_zero(x)) row.erase(j);
      }
      it = row.upper_bound(col);
    }
  }
  std::vector<std::vector<Rational>> basis;
  std::map<std::size_t, std::size_t> free_index;
  for (std::size_t c = 0; c < n_; ++c)
    if (pivot_of_[c] == npos) {
      free_index[c] = basis.size();
      basis.emplace_back(n_, Rational(0));
      basis.back()[c] = 1;
    }
  for (const auto& row : rr) {
    std::size_t pc = row.begin()->first;
    for (auto it = std::next(row.begin()); it != row.end(); ++it) basis[free_index.at(it->first)][pc] = -it->second;
  }
  return basis;
}

}  // namespace gaha

namespace gaha {

SparseOp SparseOp::identity(std::size_t n) {
  SparseOp m(n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i][i] = 1;
  return m;
}

SparseOp SparseOp::from_dense(const QMatrix& d) {
  SparseOp m(d.rows());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (!gaha::is_zero(d(i, j))) m.rows_[i][j] = d(i, j);
  return m;
}

void SparseOp::add(std::size_t i, std::size_t j, const Rational& v) {
  if (gaha::is_zero(v)) return;
  auto& r = rows_[i];
  auto it = r.find(j);
  if (it == r.end()) {
    r.emplace(j, v);
    return;
  }
  it->second += v;
  if (gaha::is_zero(it->second)) r.erase(it);
}

SparseOp& SparseOp::operator+=(const SparseOp& o) {
  for (std::size_t i = 0; i < o.rows_.size(); ++i)
    for (const auto& [j, v] : o.rows_[i]) add(i, j, v);
  return *this;
}

SparseOp& SparseOp::operator-=(const SparseOp& o) {
  for (std::size_t i = 0; i < o.rows_.size(); ++i)
    for (const auto& [j, v] : o.rows_[i]) add(i, j, -v);
  return *this;
}

SparseOp& SparseOp::operator*=(const Rational& s) {
  if (gaha::is_zero(s)) {
    for (auto& r : rows_) r.clear();
    return *this;
  }
  for (auto& r : rows_)
    for (auto& [j, v] : r) v *= s;
  return *this;
}

SparseOp operator*(const SparseOp& a, const SparseOp& b) {
  SparseOp c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto& [k, x] : a.rows_[i])
      for (const auto& [j, y] : b.rows_[k]) c.add(i, j, x * y);
  return c;
}

bool SparseOp::is_zero() const {
  for (const auto& r : rows_)
    if (!r.empty()) return false;
  return true;
}

QMatrix SparseOp::dense() const {
  QMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i)
    for (const auto& [j, v] : rows_[i]) m(i, j) = v;
  return m;
}

}  // namespace gaha
