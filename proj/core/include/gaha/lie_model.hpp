#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaha/check.hpp"
#include "gaha/linalg.hpp"
#include "gaha/roots.hpp"

namespace gaha {

// Coordinates of matrices with respect to a fixed list of matrices.
class SpanCoords {
 public:
  SpanCoords() = default;
  explicit SpanCoords(std::vector<QMatrix> basis);
  std::size_t size() const { return basis_.size(); }
  const std::vector<QMatrix>& basis() const { return basis_; }
  // throws std::domain_error when x is not in the span
  std::vector<Rational> coords(const QMatrix& x) const;
  std::optional<std::vector<Rational>> try_coords(const QMatrix& x) const;
  QMatrix combine(const std::vector<Rational>& c) const;

 private:
  std::vector<QMatrix> basis_;
  std::vector<std::size_t> rows_;  // flattened entries used for the solve
  QMatrix inv_;
};

struct BasisVector {
  QMatrix m;
  std::size_t dual = 0;     // E* = dual_scale * basis[dual]
  Rational dual_scale;
  bool in_k = false;
  std::string name;
};

struct RestrictedRootSpace {
  Root alpha;  // coordinates x_j = alpha(A_j)
  std::vector<QMatrix> vectors;
};

// Data attached to one simple reflection of the normalized Hecke algebra.
struct ReflectionData {
  std::size_t generator = 0;  // Hecke generator index
  std::optional<Root> alpha;  // restricted root (absent for the outer flip of O(q,q))
  GMatrix X, Z, k;            // k = exp(pi Z / 2), or the explicit outer element
};

class LieModel {
 public:
  static LieModel build(const GroupDescriptor& g);

  const GroupDescriptor& group() const { return g_; }
  int dim_v() const { return N_; }
  int rank() const { return static_cast<int>(a_.size()); }
  const Rational& kappa_scale() const { return kappa_scale_; }
  bool has_form() const { return has_J_; }
  const QMatrix& J() const { return J_; }
  bool has_xi() const { return has_xi_; }
  const QMatrix& xi() const { return xi_; }

  Rational kappa(const QMatrix& x, const QMatrix& y) const { return kappa_scale_ * (x * y).trace(); }
  GaussRational kappa(const GMatrix& x, const GMatrix& y) const;
  QMatrix theta(const QMatrix& x) const;
  GMatrix theta(const GMatrix& x) const;
  // antilinear involution fixing the real form
  GMatrix sigma(const GMatrix& x) const;
  bool in_algebra(const QMatrix& x) const;

  const std::vector<BasisVector>& basis() const { return basis_; }
  const SpanCoords& coords() const { return coords_; }
  QMatrix dual_of(std::size_t i) const;

  const std::vector<QMatrix>& a_basis() const { return a_; }        // A_j
  const std::vector<QMatrix>& hecke_eps() const { return eps_; }    // image of eps_j
  const std::vector<RestrictedRootSpace>& roots() const { return roots_; }
  const std::vector<QMatrix>& n_basis() const { return n_; }
  const std::vector<QMatrix>& k_basis() const { return k_; }
  const std::vector<QMatrix>& m_basis() const { return m_; }
  const std::vector<QMatrix>& m_finite() const { return m_finite_; }
  const std::vector<ReflectionData>& reflections() const { return refl_; }
  const std::vector<Rational>& rho() const { return rho_; }  // rho(eps_j)

  // |(g_R)_alpha| as real dimension, keyed like TableEntry::root_space_dims
  int root_space_dim(const Root& alpha) const;
  Rational norm2(const Root& alpha) const;  // dual of kappa restricted to a

  GaussRational mu0(const GMatrix& k) const;  // the character mu_0 on K
  Rational dmu0(const QMatrix& x) const;      // its differential on k

  QMatrix casimir() const;  // sum E E* on V
  QMatrix omega_vv() const;    // sum E (x) E*
  QMatrix omega_k_vv() const;  // sum over B cap k
  QMatrix omega_p_vv() const;
  QMatrix flip_vv() const;     // R_12
  QMatrix trivial_projector_vv() const;  // pr_1 (zero for gl)
  // projection onto the K-invariants inside V (x) V_eps, V_eps the xi = eps part
  QMatrix trivial_k_part_vv(int eps) const;
  // projection onto the trivial K-isotypic part of V (x) V
  QMatrix trivial_k_projector_vv() const;

 private:
  GroupDescriptor g_;
  int N_ = 0;
  Rational kappa_scale_;
  bool has_J_ = false, has_xi_ = false;
  QMatrix J_, xi_;
  std::vector<BasisVector> basis_;
  SpanCoords coords_;
  std::vector<QMatrix> a_, eps_, n_, k_, m_, m_finite_;
  std::vector<RestrictedRootSpace> roots_;
  std::vector<ReflectionData> refl_;
  std::vector<Rational> rho_;
};

// Structural checks: duality, theta flags, Casimir scalar, invariance of
// Omega, and the normalization and Weyl action of each k_alpha.
CheckResult check_model(const LieModel& L);
// Omega^k = 1/2(R + m R m) - 1/2 (dim V) pr_1, pr_1 the trivial K-isotypic
// projector (no pr_1 term for U). False for O(p,q) with p != q.
CheckResult omega_k_lemma_check(const LieModel& L);

// exp(pi Z / 2) by interpolation on the spectrum; throws std::domain_error
// unless Z is semisimple with eigenvalues in iZ
GMatrix exp_pi_half(const GMatrix& Z);
// the integers m with i m an eigenvalue of Z
std::vector<int> imaginary_spectrum(const GMatrix& Z);

Rational sqrt_exact(const Rational& q);  // throws unless q is a square

}  // namespace gaha
