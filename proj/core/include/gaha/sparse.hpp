#pragma once

#include <map>
#include <vector>

#include "gaha/rational.hpp"

namespace gaha {

using SparseRow = std::map<std::size_t, Rational>;

// Incremental echelon form for large homogeneous systems. Rows are
// reduced as they arrive, so memory stays at rank-many rows.
class SparseSystem {
 public:
  explicit SparseSystem(std::size_t nvars) : n_(nvars), pivot_of_(nvars, npos) {}

  std::size_t nvars() const { return n_; }
  std::size_t rank() const { return rows_.size(); }

  // returns true when the row was independent of what is already there
  bool add(SparseRow row);

  std::vector<std::vector<Rational>> nullspace() const;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  void reduce(SparseRow& row) const;

  std::size_t n_;
  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivot_of_;  // column -> row index
};

}  // namespace gaha

#include "gaha/matrix.hpp"

namespace gaha {

// Square operator stored by rows; used for tensor-power operators where
// dense products would be wasteful.
class SparseOp {
 public:
  SparseOp() = default;
  explicit SparseOp(std::size_t n) : rows_(n) {}
  static SparseOp identity(std::size_t n);
  static SparseOp from_dense(const QMatrix& m);

  std::size_t size() const { return rows_.size(); }
  void add(std::size_t i, std::size_t j, const Rational& v);
  const SparseRow& row(std::size_t i) const { return rows_[i]; }

  SparseOp& operator+=(const SparseOp& o);
  SparseOp& operator-=(const SparseOp& o);
  SparseOp& operator*=(const Rational& s);
  friend SparseOp operator+(SparseOp a, const SparseOp& b) { return a += b; }
  friend SparseOp operator-(SparseOp a, const SparseOp& b) { return a -= b; }
  friend SparseOp operator*(SparseOp a, const Rational& s) { return a *= s; }
  friend SparseOp operator*(const SparseOp& a, const SparseOp& b);
  friend bool operator==(const SparseOp& a, const SparseOp& b) { return a.rows_ == b.rows_; }
  bool is_zero() const;
  QMatrix dense() const;

 private:
  std::vector<SparseRow> rows_;  // no explicit zeros
};

inline SparseOp commutator(const SparseOp& a, const SparseOp& b) { return a * b - b * a; }

}  // namespace gaha
