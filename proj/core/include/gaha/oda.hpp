#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gaha/enveloping.hpp"
#include "gaha/hecke.hpp"
#include "gaha/principal_series.hpp"
#include "gaha/tensor_model.hpp"

namespace gaha {

// An element of U(g) (x)_{U(k)} 1 (x) V^{(x)k}, one coset element per tensor
// index; the K-invariant ones are the equivariant homs.
using XTensor = std::vector<UElem>;

struct HomSpace {
  int degree = 0;
  std::vector<Word> words;     // truncated coset basis
  std::vector<XTensor> homs;   // basis of the invariants
};

// K-invariants of mu_0^* (x) V^{(x)k} (x) X^R_{<=d}: k acts by left
// multiplication then coset reduction, the finite generators (M and the real
// k_alpha) by g^{(x)k} / mu_0(g) and Ad(g). Throws std::length_error above cap.
HomSpace equivariant_homs(const Enveloping& U, const TensorSpace& ts, int d, std::size_t cap = 400000);

// sum_t u_t T_t
UElem pair_with(const XTensor& T, const Vec& u);
// a in slot i (1-based)
XTensor slot_action(const TensorSpace& ts, const XTensor& T, const QMatrix& a, int i);
// Omega_{0,i} restricted to part: sum_E (E on X) (x) (E^* in slot i)
XTensor omega_zero(const Enveloping& U, const TensorSpace& ts, const XTensor& T, int i, OmegaPart part);
XTensor operator+(const XTensor& a, const XTensor& b);
XTensor scaled(const XTensor& a, const Rational& c);

// X = H (x)_{C[W]} 1, stored as p with p(eps) (x) 1.
class OdaMap {
 public:
  OdaMap(std::shared_ptr<const Enveloping> U, std::shared_ptr<const HeckeAlgebra> H);

  const Enveloping& enveloping() const { return *U_; }
  const HeckeAlgebra& algebra() const { return *H_; }

  // the rho-shifted gamma0: q(a) = gamma0(x)(a + rho)
  Poly gamma_shifted(const UElem& x) const;
  // q(eps') (x) 1, eps' the opposite-chamber generators
  Poly opposite(const Poly& q) const;
  // Gamma(Upsilon)(u) = q(eps') (x) 1
  Poly gamma_map(const UElem& x) const { return opposite(gamma_shifted(x)); }
  Poly gamma_map(const XTensor& T, const Vec& u) const { return gamma_map(pair_with(T, u)); }

  Poly act(const HeckeElement& h, const Poly& x) const;
  // the image of x (x) 1 in X_1(nu): x . sum_w w (x) 1
  Vec at(const PSModule& ps, const Poly& x) const;

 private:
  std::shared_ptr<const Enveloping> U_;
  std::shared_ptr<const HeckeAlgebra> H_;
  std::vector<HeckeElement> opp_;
};

struct OdaOptions {
  int degree = 3;
  std::vector<std::vector<Rational>> nus;  // sample points for the nu-level checks
};

struct OdaReport {
  std::string check;
  CheckResult result;
};

// structure constants, hom space, injectivity and W-equivariance of Gamma,
// the f~_i identity in X and at each nu, the W-parts at each nu, and the
// slot-0 operator identities
std::vector<OdaReport> oda_suite(const GroupDescriptor& g, const OdaOptions& opt);

// Phi_nu(z) = gamma0(P_K z)(nu + rho): <v_K, z v_K> for the spherical vector
// of the real principal series, normalized by <v_K, v_K> = 1. The pairing
// <x, y>_X = Phi_nu(y^dagger x) is then invariant.
class SphericalFunctional {
 public:
  SphericalFunctional(const Enveloping& U, int degree);
  // throws std::out_of_range for elements above the degree
  Rational operator()(const UElem& z, const std::vector<Rational>& nu) const;
  Rational pairing(const UElem& x, const UElem& y, const std::vector<Rational>& nu) const;

 private:
  const Enveloping& U_;
  std::vector<Word> words_;
  std::map<Word, std::size_t> index_;
  std::vector<UElem> weights_;  // for each word, P_K(word) as a pure-a combination
};

struct TransferPoint {
  std::vector<Rational> nu;
  Rational scale;          // induced = scale * transported Hecke form
  Inertia hecke, induced;  // of the Hecke-side form and of the induced form on the homs
};

struct HermitianTransfer {
  CheckResult result;
  std::vector<TransferPoint> points;
};

// The form (x (x) u, y (x) v) = <x, y>_X (u, v)_V, coordinate form on V, on
// the homs against the Hecke-side form on X_1(nu) under
// Upsilon -> Gamma_nu(Upsilon)(u_id): one positive scalar must relate them.
HermitianTransfer hermitian_transfer(const GroupDescriptor& g, int degree, const std::vector<std::vector<Rational>>& nus);

}  // namespace gaha
