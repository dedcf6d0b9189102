#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gaha/check.hpp"
#include "gaha/lie_model.hpp"
#include "gaha/sparse.hpp"

namespace gaha {

// One-dimensional character of K_R.
//   GL(n,R): m_p = 1 is sgn det (mu_0)
//   U(p,q):  det^{m_p} on U(p), det^{m_q} on U(q)
//   Sp(2n,R): det^{m_q}, det taken on the lower block of K = U(n)
//   O(p,q):  sgn^{m_p} on O(p), sgn^{m_q} on O(q)
struct Character {
  int m_p = 0, m_q = 0;
  static Character mu0(const GroupDescriptor& g);
  GaussRational value(const LieModel& L, const GMatrix& k) const;
  Rational differential(const LieModel& L, const QMatrix& x) const;
  GaussRational differential(const LieModel& L, const GMatrix& x) const;
  std::string to_string(const GroupDescriptor& g) const;
};

using Vec = std::vector<Rational>;
using GVec = std::vector<GaussRational>;

enum class OmegaPart { Full, K, P };

// mu* (x) V^{(x) k}. Operators are matrices of size (dim V)^k; slot i is
// 1-based and slot 1 is the most significant tensor index.
class TensorSpace {
 public:
  TensorSpace(std::shared_ptr<const LieModel> L, int k, Character mu);
  TensorSpace(std::shared_ptr<const LieModel> L, int k) : TensorSpace(L, k, Character::mu0(L->group())) {}

  const LieModel& model() const { return *L_; }
  std::shared_ptr<const LieModel> model_ptr() const { return L_; }
  int slots() const { return k_; }
  const Character& mu() const { return mu_; }
  std::size_t dim() const { return dim_; }

  QMatrix slot(const QMatrix& a, int i) const;
  GMatrix slot(const GMatrix& a, int i) const;
  QMatrix lie(const QMatrix& x) const;    // sum_i (x)_i - dmu(x)
  GMatrix lie(const GMatrix& x) const;
  GMatrix group(const GMatrix& g) const;  // mu(g)^{-1} g^{(x)k}
  QMatrix omega(int i, int j, OmegaPart part = OmegaPart::Full) const { return omega_op(i, j, part).dense(); }
  QMatrix transposition(int i, int j) const { return transposition_op(i, j).dense(); }  // signed: pi_k(s_{i,j})
  // sparse forms; product_op puts each matrix in its slot
  SparseOp product_op(const std::vector<std::pair<int, const QMatrix*>>& factors) const;
  SparseOp omega_op(int i, int j, OmegaPart part = OmegaPart::Full) const;
  SparseOp transposition_op(int i, int j) const;
  QMatrix sbar(int i) const;                  // -xi in slot i
  // Hecke-side image of a simple generator of the normalized algebra
  QMatrix hecke_generator(std::size_t g) const;
  // J-contraction of slots i, i+1; returns a vector on V^{(x)(k-2)}
  Vec contract(const Vec& u, int i) const;

 private:
  std::shared_ptr<const LieModel> L_;
  int k_;
  Character mu_;
  std::size_t dim_;
};

// Basis of the M-invariants of mu* (x) V^{(x) m} (m-annihilation and the
// finite generators, with the twist).
std::vector<Vec> invariants(const TensorSpace& ts, int m);

// u_w = pi_k(w) u_id with u_id = e_1 (x) ... (x) e_n for GL and
// f_1^+ (x) ... (x) f_k^+ otherwise, one vector per element of W, in the
// order of WeylGroup of the normalized algebra.
std::vector<Vec> closed_form_basis(const TensorSpace& ts);

// matrix of op restricted to span(basis), in that basis; throws if op
// does not preserve the span
QMatrix restrict_to(const std::vector<Vec>& basis, const QMatrix& op);
GMatrix restrict_to(const std::vector<Vec>& basis, const GMatrix& op);

struct TensorReport {
  std::string check;
  CheckResult result;
};

CheckResult dimension_check(const TensorSpace& ts);  // invariants(m) for m <= k
CheckResult regular_rep_check(const TensorSpace& ts);
CheckResult single_petal_check(const TensorSpace& ts);
CheckResult weyl_match_check(const TensorSpace& ts);
CheckResult kact_identity_check(const TensorSpace& ts);
CheckResult contraction_kernel_check(const TensorSpace& ts);
CheckResult sbar_anticommutator_check(const TensorSpace& ts);  // slots >= 1 only
// A_k relations, commutation with the diagonal action and the partial sum
// identity, on V^{(x) slots}
CheckResult ak_relations_check(const TensorSpace& ts);
CheckResult form_positivity_check(const LieModel& L);

struct QmuParameters {
  Rational r, c;
};
// throws std::logic_error if Q_mu - r is not a multiple of xi
QmuParameters q_mu_parameters(const LieModel& L, const Character& mu);

// every tensor check for the group at its real rank
std::vector<TensorReport> tensor_suite(const GroupDescriptor& g);

}  // namespace gaha
