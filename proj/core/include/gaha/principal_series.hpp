#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gaha/check.hpp"
#include "gaha/hecke.hpp"
#include "gaha/linalg.hpp"

namespace gaha {

using PolyMatrix = Matrix<Poly>;

struct SphericalParameter {
  std::vector<Rational> nu;
  bool dominant = false;  // <nu, a-coroot> >= 0 for every simple a
};

SphericalParameter make_parameter(const HeckeAlgebra& H, std::vector<Rational> nu);

// X_1(nu) = H (x)_{S(a)} C_nu on the basis {w (x) 1}, w in BFS order.
class PSModule {
 public:
  PSModule(std::shared_ptr<const HeckeAlgebra> H, SphericalParameter nu, std::vector<QMatrix> eps);

  const HeckeAlgebra& algebra() const { return *H_; }
  std::shared_ptr<const HeckeAlgebra> algebra_ptr() const { return H_; }
  const SphericalParameter& parameter() const { return nu_; }
  std::size_t dim() const { return H_->weyl().size(); }

  const QMatrix& eps(int i) const { return eps_[i]; }
  QMatrix group(std::size_t w) const;  // permutation matrix of w
  QMatrix simple(std::size_t g) const { return group(H_->generator_element(g)); }
  QMatrix linear(const std::vector<Rational>& f) const;
  QMatrix drinfeld(const std::vector<Rational>& f) const;
  QMatrix star_eps(int i) const;  // pi(eps_i*)
  QMatrix action(const HeckeElement& h) const;

  std::vector<Rational> spherical_vector() const;  // sum_w w (x) 1
  std::vector<Rational> highest_vector() const;    // 1 (x) 1

 private:
  std::shared_ptr<const HeckeAlgebra> H_;
  SphericalParameter nu_;
  std::vector<QMatrix> eps_;
};

// The eps-matrices with polynomial entries in nu, computed once.
class SymbolicPS {
 public:
  explicit SymbolicPS(std::shared_ptr<const HeckeAlgebra> H, int max_rank = 4);
  const PolyMatrix& eps(int i) const { return eps_[i]; }
  PSModule at(const std::vector<Rational>& nu) const;
  const HeckeAlgebra& algebra() const { return *H_; }

 private:
  std::shared_ptr<const HeckeAlgebra> H_;
  std::vector<PolyMatrix> eps_;
};


// all defining relations as matrix identities, plus eps_i (1 (x) 1) = nu_i
CheckResult check_module_relations(const PSModule& ps);
// dimension of the span reached from 1 (x) 1
std::size_t krylov_dimension(const PSModule& ps);
// trace of the W-part of each group matrix: |W| at e, 0 elsewhere
CheckResult check_regular_character(const PSModule& ps);

enum class FormStatus { Hermitian, NonHermitian, Degenerate };
std::string to_string(FormStatus s);

struct InvariantForm {
  FormStatus status = FormStatus::NonHermitian;
  QMatrix matrix;                  // when Hermitian
  std::vector<QMatrix> solutions;  // basis of all invariant forms (any status)
};

// solves pi(x)^T F = F pi(x*) for the generators, F symmetric
InvariantForm hermitian_form(const PSModule& ps);
CheckResult check_form_invariance(const PSModule& ps, const QMatrix& F, int random_elements = 0, std::uint64_t seed = 3);

struct Quotient {
  std::size_t radical_dim = 0;
  std::size_t dim = 0;
  QMatrix form;
  Inertia inertia;
};

// throws std::logic_error if the spherical vector lies in the radical
Quotient spherical_quotient(const PSModule& ps, const QMatrix& F);

struct ScanRow {
  std::vector<Rational> nu;
  bool dominant = false;
  FormStatus status = FormStatus::NonHermitian;
  std::size_t radical_dim = 0;
  Inertia inertia;
  bool unitary = false;
};

std::vector<ScanRow> unitarity_scan(const SymbolicPS& sym, const std::vector<std::vector<Rational>>& grid,
                                    unsigned threads = 0);

// nu = t * dir for t = a, a + (b-a)/n, ..., b; text "a..b/n"
std::vector<std::vector<Rational>> parse_line(const std::string& spec, const std::vector<Rational>& dir);
// direction with <dir, a-coroot> = 1 for every simple a
std::vector<Rational> default_direction(const HeckeAlgebra& H);

std::string scan_csv(const std::vector<ScanRow>& rows);
std::string scan_json(const std::string& group, const std::vector<ScanRow>& rows);

}  // namespace gaha
