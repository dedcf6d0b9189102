#include "gaha/lie_model.hpp"

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>

#include "gaha/hecke.hpp"

namespace gaha {

namespace {

QMatrix E(int n, int i, int j) {
  QMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

std::vector<Rational> flatten(const QMatrix& m) { return m.data(); }

GaussRational ipow(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return GaussRational(1);
    case 1: return GaussRational::i();
    case 2: return GaussRational(-1);
    default: return -GaussRational::i();
  }
}

bool rational_square(const mpz_class& z, mpz_class& root) {
  if (z < 0 || !mpz_perfect_square_p(z.get_mpz_t())) return false;
  mpz_sqrt(root.get_mpz_t(), z.get_mpz_t());
  return true;
}

std::optional<Rational> try_sqrt(const Rational& q) {
  mpz_class a, b;
  if (!rational_square(q.get_num(), a) || !rational_square(q.get_den(), b)) return std::nullopt;
  return Rational(a, b);
}

}  // namespace

Rational sqrt_exact(const Rational& q) {
  auto r = try_sqrt(q);
  if (!r) throw std::domain_error("not a rational square: " + q.get_str());
  return *r;
}

SpanCoords::SpanCoords(std::vector<QMatrix> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) return;
  std::size_t len = basis_[0].rows() * basis_[0].cols();
  QMatrix t(basis_.size(), len);  // rows are flattened basis matrices
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    auto f = flatten(basis_[i]);
    for (std::size_t j = 0; j < len; ++j) t(i, j) = f[j];
  }
  auto e = rref(t);
  if (e.pivots.size() != basis_.size()) throw std::invalid_argument("SpanCoords: dependent basis");
  rows_ = e.pivots;
  QMatrix sq(basis_.size(), basis_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t i = 0; i < basis_.size(); ++i) sq(r, i) = t(i, rows_[r]);
  inv_ = *inverse(sq);
}

std::optional<std::vector<Rational>> SpanCoords::try_coords(const QMatrix& x) const {
  auto f = flatten(x);
  std::vector<Rational> rhs(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) rhs[r] = f[rows_[r]];
  std::vector<Rational> c = inv_.apply(rhs);
  if (!(combine(c) == x)) return std::nullopt;
  return c;
}

std::vector<Rational> SpanCoords::coords(const QMatrix& x) const {
  auto c = try_coords(x);
  if (!c) throw std::domain_error("matrix outside the span");
  return *c;
}

QMatrix SpanCoords::combine(const std::vector<Rational>& c) const {
  QMatrix m(basis_[0].rows(), basis_[0].cols());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!is_zero(c[i])) m += basis_[i] * c[i];
  return m;
}

std::vector<int> imaginary_spectrum(const GMatrix& Z) {
  std::size_t n = Z.rows();
  Rational bound(0);
  for (std::size_t i = 0; i < n; ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < n; ++j) s += abs(Z(i, j).re) + abs(Z(i, j).im);
    if (s > bound) bound = s;
  }
  mpz_class bz = bound.get_num() / bound.get_den() + 1;
  long b = bz.get_si();
  std::vector<int> spec;
  for (long m = -b; m <= b; ++m) {
    GMatrix t = Z;
    for (std::size_t i = 0; i < n; ++i) t(i, i) -= GaussRational(0, Rational(m));
    if (rank(t) < n) spec.push_back(static_cast<int>(m));
  }
  return spec;
}

GMatrix exp_pi_half(const GMatrix& Z) {
  std::size_t n = Z.rows();
  auto spec = imaginary_spectrum(Z);
  GMatrix I = GMatrix::identity(n);
  auto shifted = [&](int m) {
    GMatrix t = Z;
    for (std::size_t i = 0; i < n; ++i) t(i, i) -= GaussRational(0, Rational(m));
    return t;
  };
  // semisimple with these eigenvalues, and nothing else
  GMatrix minpoly = I;
  for (int m : spec) minpoly = minpoly * shifted(m);
  if (!minpoly.is_zero_matrix()) throw std::domain_error("exp_pi_half: spectrum not semisimple in iZ");
  GMatrix k(n, n);
  for (int m : spec) {
    GMatrix L = I;
    for (int m2 : spec) {
      if (m2 == m) continue;
      L = L * shifted(m2);
      L *= GaussRational(1) / GaussRational(0, Rational(m - m2));
    }
    k += L * ipow(m);
  }
  return k;
}

GaussRational LieModel::kappa(const GMatrix& x, const GMatrix& y) const {
  return (x * y).trace() * GaussRational(kappa_scale_);
}

QMatrix LieModel::theta(const QMatrix& x) const {
  if (!has_xi_) return -x.transpose();
  return xi_ * x * xi_;
}

GMatrix LieModel::theta(const GMatrix& x) const {
  if (!has_xi_) return -x.transpose();
  GMatrix xi = to_gauss(xi_);
  return xi * x * xi;
}

GMatrix LieModel::sigma(const GMatrix& x) const {
  if (g_.family == Family::GL || g_.family == Family::O) {
    GMatrix c = x;
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = conj(c(i, j));
    return c;
  }
  GMatrix xi = to_gauss(xi_);
  return -(xi * x.adjoint() * xi);
}

bool LieModel::in_algebra(const QMatrix& x) const { return coords_.try_coords(x).has_value(); }

QMatrix LieModel::dual_of(std::size_t i) const {
  return basis_[basis_[i].dual].m * basis_[i].dual_scale;
}

Rational LieModel::norm2(const Root& alpha) const {
  Rational s(0);
  for (std::size_t j = 0; j < a_.size(); ++j) s += Rational(alpha[j] * alpha[j]) / kappa(a_[j], a_[j]);
  return s;
}

int LieModel::root_space_dim(const Root& alpha) const {
  for (const auto& r : roots_)
    if (r.alpha == alpha) return static_cast<int>(r.vectors.size());
  return 0;
}

GaussRational LieModel::mu0(const GMatrix& k) const {
  std::size_t N = static_cast<std::size_t>(N_);
  switch (g_.family) {
    case Family::GL: {
      GaussRational d = det_generic(k);
      if (!is_zero(d.im)) throw std::domain_error("mu0: non-real determinant");
      return GaussRational(sgn(d.re) >= 0 ? 1 : -1);
    }
    case Family::U: return det_generic(principal_block(k, g_.p, N));
    case Family::Sp: return det_generic(principal_block(k, N / 2, N));
    case Family::O: {
      GaussRational d = det_generic(principal_block(k, g_.p, N));
      return GaussRational(sgn(d.re) >= 0 ? 1 : -1);
    }
  }
  return GaussRational(1);
}

Rational LieModel::dmu0(const QMatrix& x) const {
  std::size_t N = static_cast<std::size_t>(N_);
  switch (g_.family) {
    case Family::U: return principal_block(x, g_.p, N).trace();
    case Family::Sp: return principal_block(x, N / 2, N).trace();
    default: return Rational(0);
  }
}

QMatrix LieModel::casimir() const {
  QMatrix c(N_, N_);
  for (std::size_t i = 0; i < basis_.size(); ++i) c += basis_[i].m * dual_of(i);
  return c;
}

namespace {
QMatrix omega_part(const LieModel& L, int which) {  // 0 all, 1 k, 2 p
  std::size_t N = L.dim_v();
  QMatrix o(N * N, N * N);
  for (std::size_t i = 0; i < L.basis().size(); ++i) {
    bool k = L.basis()[i].in_k;
    if ((which == 1 && !k) || (which == 2 && k)) continue;
    o += kron(L.basis()[i].m, L.dual_of(i));
  }
  return o;
}
}  // namespace

QMatrix LieModel::omega_vv() const { return omega_part(*this, 0); }
QMatrix LieModel::omega_k_vv() const {
  if (!has_xi_) throw std::logic_error("omega_k_vv: no xi for GL(n,R)");
  return omega_part(*this, 1);
}
QMatrix LieModel::omega_p_vv() const { return omega_part(*this, 2); }

QMatrix LieModel::flip_vv() const {
  std::size_t N = N_;
  QMatrix r(N * N, N * N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) r(b * N + a, a * N + b) = 1;
  return r;
}

QMatrix LieModel::trivial_projector_vv() const {
  std::size_t N = N_;
  QMatrix pr(N * N, N * N);
  if (g_.family == Family::GL || g_.family == Family::U) return pr;
  QMatrix Ji = *inverse(J_);
  // t = sum (J^-1)_ab e_a (x) e_b is the invariant tensor, paired by J
  Rational norm(0);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) norm += Ji(a, b) * J_(a, b);
  for (std::size_t r = 0; r < N * N; ++r)
    for (std::size_t c = 0; c < N * N; ++c) {
      const Rational& t = Ji(r / N, r % N);
      const Rational& j = J_(c / N, c % N);
      if (!is_zero(t) && !is_zero(j)) pr(r, c) = t * j / norm;
    }
  return pr;
}

QMatrix LieModel::trivial_k_part_vv(int eps) const {
  std::size_t N = N_;
  QMatrix pr(N * N, N * N);
  if (!has_xi_ || g_.family == Family::U) return pr;
  // the invariant tensor cut down to V (x) V_eps, paired by J on the same slots
  QMatrix Ji = *inverse(J_);
  auto keep = [&](std::size_t b) { return xi_(b, b) == Rational(eps); };
  Rational norm(0);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      if (keep(b)) norm += Ji(a, b) * J_(a, b);
  if (is_zero(norm)) return pr;
  for (std::size_t r = 0; r < N * N; ++r) {
    if (!keep(r % N) || is_zero(Ji(r / N, r % N))) continue;
    for (std::size_t c = 0; c < N * N; ++c)
      if (keep(c % N) && !is_zero(J_(c / N, c % N))) pr(r, c) = Ji(r / N, r % N) * J_(c / N, c % N) / norm;
  }
  return pr;
}

QMatrix LieModel::trivial_k_projector_vv() const { return trivial_k_part_vv(1) + trivial_k_part_vv(-1); }

LieModel LieModel::build(const GroupDescriptor& g) {
  LieModel L;
  L.g_ = g;
  const int N = g.dim_v();
  L.N_ = N;
  const int k = g.real_rank();
  const int p = g.family == Family::Sp ? g.n : g.p;  // a_j = p-j+1, b_j = p+j

  std::vector<std::pair<QMatrix, std::string>> raw;
  auto nm = [](const char* s, int i, int j) { return std::string(s) + std::to_string(i + 1) + std::to_string(j + 1); };
  switch (g.family) {
    case Family::GL:
      L.kappa_scale_ = 1;
      for (int i = 0; i < N; ++i) raw.push_back({E(N, i, i), nm("E", i, i)});
      for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
          raw.push_back({E(N, i, j) + E(N, j, i), nm("P", i, j)});
          raw.push_back({E(N, i, j) - E(N, j, i), nm("K", i, j)});
        }
      break;
    case Family::U:
      L.kappa_scale_ = 1;
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) raw.push_back({E(N, i, j), nm("E", i, j)});
      break;
    case Family::O:
      L.kappa_scale_ = Rational(1, 2);
      for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
          int s = (a < g.p) == (b < g.p) ? 1 : -1;  // J_aa J_bb
          raw.push_back({E(N, a, b) - E(N, b, a) * Rational(s), nm("X", a, b)});
        }
      break;
    case Family::Sp:
      L.kappa_scale_ = Rational(1, 2);
      break;
  }

  if (g.family != Family::GL) {
    L.has_xi_ = true;
    L.has_J_ = true;
    L.xi_ = QMatrix(N, N);
    for (int i = 0; i < N; ++i) L.xi_(i, i) = i < p ? 1 : -1;
    if (g.family == Family::Sp) {
      L.J_ = QMatrix(N, N);
      for (int i = 0; i < N; ++i) L.J_(i, N - 1 - i) = i < p ? 1 : -1;
      QMatrix Ji = *inverse(L.J_);
      for (int a = 0; a < N; ++a)
        for (int b = a; b < N; ++b) {
          QMatrix S = a == b ? E(N, a, a) : E(N, a, b) + E(N, b, a);
          raw.push_back({Ji * S, nm("S", a, b)});
        }
    } else {
      L.J_ = L.xi_;
    }
  }

  // Gram matrix; every basis element must pair with exactly one other
  std::size_t d = raw.size();
  for (auto& [m, name] : raw) {
    BasisVector b;
    b.m = m;
    b.name = name;
    QMatrix t = L.theta(m);
    if (t == m) b.in_k = true;
    else if (t == -m) b.in_k = false;
    else throw std::logic_error("basis vector " + name + " is not a theta eigenvector");
    L.basis_.push_back(std::move(b));
  }
  for (std::size_t i = 0; i < d; ++i) {
    std::optional<std::size_t> partner;
    Rational val;
    for (std::size_t j = 0; j < d; ++j) {
      Rational v = L.kappa(L.basis_[i].m, L.basis_[j].m);
      if (is_zero(v)) continue;
      if (partner) throw std::logic_error("basis is not dual-adapted");
      partner = j;
      val = v;
    }
    if (!partner) throw std::logic_error("degenerate form on the basis");
    L.basis_[i].dual = *partner;
    L.basis_[i].dual_scale = 1 / val;
  }
  {
    std::vector<QMatrix> ms;
    for (auto& b : L.basis_) ms.push_back(b.m);
    L.coords_ = SpanCoords(ms);
  }

  // split Cartan subspace
  for (int j = 1; j <= k; ++j) {
    if (g.family == Family::GL) {
      L.a_.push_back(E(N, j - 1, j - 1));
      L.eps_.push_back(L.a_.back());
      continue;
    }
    int a = p - j, b = p + j - 1;  // zero-based a_j, b_j
    QMatrix A = E(N, a, b) + E(N, b, a);
    if (!L.in_algebra(A)) throw std::logic_error("A_j not in the algebra");
    L.a_.push_back(A);
    L.eps_.push_back(g.family == Family::U ? A * Rational(1, 2) : A);
  }

  for (auto& b : L.basis_)
    if (b.in_k) L.k_.push_back(b.m);

  // m = centralizer of a in k
  {
    std::size_t nk = L.k_.size();
    std::size_t len = static_cast<std::size_t>(N * N);
    QMatrix sys(len * L.a_.size(), nk);
    for (std::size_t c = 0; c < nk; ++c)
      for (std::size_t j = 0; j < L.a_.size(); ++j) {
        auto f = flatten(commutator(L.a_[j], L.k_[c]));
        for (std::size_t r = 0; r < len; ++r) sys(j * len + r, c) = f[r];
      }
    for (auto& v : nullspace(sys)) {
      QMatrix m(N, N);
      for (std::size_t c = 0; c < nk; ++c)
        if (!is_zero(v[c])) m += L.k_[c] * v[c];
      L.m_.push_back(m);
    }
  }

  // restricted root spaces: joint eigenspaces of ad A_j
  {
    std::vector<QMatrix> ad;
    for (auto& A : L.a_) {
      QMatrix m(d, d);
      for (std::size_t c = 0; c < d; ++c) {
        auto col = L.coords_.coords(commutator(A, L.basis_[c].m));
        for (std::size_t r = 0; r < d; ++r) m(r, c) = col[r];
      }
      ad.push_back(std::move(m));
    }
    std::vector<int> x(k, -2);
    while (true) {
      bool nonzero = false;
      for (int v : x) nonzero |= v != 0;
      if (nonzero) {
        QMatrix sys(d * k, d);
        for (int j = 0; j < k; ++j)
          for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) sys(j * d + r, c) = ad[j](r, c);
            sys(j * d + r, r) -= x[j];
          }
        auto ns = nullspace(sys);
        if (!ns.empty()) {
          RestrictedRootSpace rs;
          rs.alpha = x;
          for (auto& v : ns) rs.vectors.push_back(L.coords_.combine(v));
          L.roots_.push_back(std::move(rs));
        }
      }
      int j = 0;
      while (j < k && x[j] == 2) x[j++] = -2;
      if (j == k) break;
      ++x[j];
    }
    L.rho_.assign(k, Rational(0));
    for (auto& rs : L.roots_) {
      int first = 0;
      for (int v : rs.alpha)
        if (v != 0) { first = v; break; }
      if (first <= 0) continue;
      for (auto& v : rs.vectors) L.n_.push_back(v);
      for (int j = 0; j < k; ++j) {
        Rational val = Rational(rs.alpha[j]) * (g.family == Family::U ? Rational(1, 2) : Rational(1));
        L.rho_[j] += val * static_cast<long>(rs.vectors.size()) / 2;
      }
    }
  }

  // finite generators of M
  auto diag_flip = [&](std::vector<int> idx) {
    QMatrix m = QMatrix::identity(N);
    for (int i : idx) m(i, i) = -1;
    return m;
  };
  switch (g.family) {
    case Family::GL:
      for (int j = 0; j < N; ++j) L.m_finite_.push_back(diag_flip({j}));
      break;
    case Family::U: break;
    case Family::Sp:
    case Family::O:
      for (int j = 1; j <= k; ++j) L.m_finite_.push_back(diag_flip({p - j, p + j - 1}));
      if (g.family == Family::O && g.p > g.q) L.m_finite_.push_back(diag_flip({0}));
      break;
  }

  // simple reflections of the normalized algebra
  HeckeAlgebra H = HeckeAlgebra::for_group(g);
  const auto& simple = H.roots().simple;
  for (std::size_t gi = 0; gi < simple.size(); ++gi) {
    ReflectionData rd;
    rd.generator = gi;
    Root hr = simple[gi];
    Root alpha(k, 0);
    int nz = 0;
    for (int v : hr) nz += v != 0;
    if (g.family == Family::GL) {
      alpha = hr;
    } else if (nz == 2) {
      alpha = hr;
    } else {
      int j = 0;
      while (hr[j] == 0) ++j;
      alpha[j] = 1;
      if (L.root_space_dim(alpha) == 0) alpha[j] = 2;
      if (L.root_space_dim(alpha) == 0) {
        // O(q,q): the sign change comes from a component of K, not from a root
        QMatrix kk = diag_flip({p + j});
        rd.k = to_gauss(kk);
        rd.X = GMatrix(N, N);
        rd.Z = GMatrix(N, N);
        L.refl_.push_back(std::move(rd));
        continue;
      }
    }
    const auto* space = static_cast<const RestrictedRootSpace*>(nullptr);
    for (auto& rs : L.roots_)
      if (rs.alpha == alpha) space = &rs;
    if (!space) throw std::logic_error("simple root without root space");
    Rational target = Rational(2) / L.norm2(alpha);
    std::vector<QMatrix> cands = space->vectors;
    for (std::size_t i = 0; i < space->vectors.size(); ++i)
      for (std::size_t j = i + 1; j < space->vectors.size(); ++j) cands.push_back(space->vectors[i] + space->vectors[j]);
    bool found = false;
    for (const auto& Y : cands) {
      GMatrix Yg = to_gauss(Y);
      GMatrix sY = L.sigma(Yg);
      GMatrix iY = Yg * GaussRational::i();
      for (const GMatrix& X0 : {GMatrix(Yg + sY), GMatrix(iY + L.sigma(iY))}) {
        if (X0.is_zero_matrix()) continue;
        GaussRational r = -L.kappa(X0, L.theta(X0));
        if (!is_zero(r.im) || r.re <= 0) continue;
        auto lam = try_sqrt(target / r.re);
        if (!lam) continue;
        rd.X = X0 * GaussRational(*lam);
        rd.Z = rd.X + L.theta(rd.X);
        rd.k = exp_pi_half(rd.Z);
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found) throw std::logic_error("no rationally normalized root vector");
    rd.alpha = alpha;
    L.refl_.push_back(std::move(rd));
  }
  return L;
}

}  // namespace gaha

namespace gaha {

namespace {

std::string rstr(const Root& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

bool preserves_forms(const LieModel& L, const GMatrix& k) {
  if (!L.has_xi()) {
    return k.transpose() * k == GMatrix::identity(k.rows());  // O(n)
  }
  GMatrix xi = to_gauss(L.xi());
  if (!(k * xi == xi * k)) return false;
  if (!(k.adjoint() * xi * k == xi)) return false;
  if (L.group().family == Family::U) return true;
  GMatrix J = to_gauss(L.J());
  return k.transpose() * J * k == J;
}

}  // namespace

CheckResult omega_k_lemma_check(const LieModel& L) {
  CheckResult r;
  if (!L.has_xi()) return r;
  QMatrix I = QMatrix::identity(L.dim_v());
  QMatrix mx = kron(I, L.xi());
  QMatrix R = L.flip_vv();
  QMatrix rhs = (R + mx * R * mx) * Rational(1, 2) - L.trivial_k_projector_vv() * make_rational(L.dim_v(), 2);
  r.expect(L.omega_k_vv() == rhs, L.group().name() + ": Omega^k != 1/2(R + m R m) - 1/2 (dim V) pr_1");
  return r;
}

CheckResult check_model(const LieModel& L) {
  CheckResult r;
  const auto& B = L.basis();
  const std::string gname = L.group().name();
  for (std::size_t i = 0; i < B.size(); ++i) {
    for (std::size_t j = 0; j < B.size(); ++j)
      r.expect(L.kappa(B[i].m, L.dual_of(j)) == Rational(i == j ? 1 : 0),
               gname + ": kappa(E, F*) != delta at " + B[i].name + ", " + B[j].name);
    QMatrix t = L.theta(B[i].m);
    r.expect(t == (B[i].in_k ? B[i].m : QMatrix(-B[i].m)), gname + ": theta flag wrong on " + B[i].name);
    if (L.group().family == Family::O || L.group().family == Family::Sp) {
      QMatrix c = B[i].m.transpose() * L.J() + L.J() * B[i].m;
      r.expect(c.is_zero_matrix(), gname + ": " + B[i].name + " does not preserve J");
    }
  }
  if (L.has_xi()) r.expect(L.xi() * L.xi() == QMatrix::identity(L.dim_v()), gname + ": xi^2 != 1");

  QMatrix C = L.casimir();
  r.expect(C == QMatrix::identity(L.dim_v()) * C(0, 0), gname + ": Casimir is not scalar on V");

  QMatrix Om = L.omega_vv();
  QMatrix I = QMatrix::identity(L.dim_v());
  for (const auto& b : B) {
    QMatrix delta = kron(b.m, I) + kron(I, b.m);
    r.expect(commutator(delta, Om).is_zero_matrix(), gname + ": [Delta(x), Omega] != 0 for x = " + b.name);
  }
  QMatrix R = L.flip_vv();
  r.expect(R * Om * R == Om, gname + ": Omega is not symmetric");
  r.expect(Om == R - L.trivial_projector_vv() * Rational(L.dim_v()), gname + ": Omega != R - (dim V) pr_1");
  if (L.has_xi()) {
    QMatrix mx = kron(I, L.xi());
    // what holds in general: each xi-eigenspace V_eps carries its own pairing
    QMatrix rhs = (R + mx * R * mx) * Rational(1, 2);
    for (int eps : {1, -1}) {
      long d = 0;
      for (std::size_t a = 0; a < L.dim_v(); ++a) d += L.xi()(a, a) == Rational(eps);
      rhs -= L.trivial_k_part_vv(eps) * Rational(d);
    }
    r.expect(L.omega_k_vv() == rhs, gname + ": Omega^k != 1/2(R + m R m) - sum dim(V_eps) pr_eps");
    r.expect(L.omega_k_vv() + L.omega_p_vv() == Om, gname + ": Omega^k + Omega^p != Omega");
  }

  // the table's root multiplicities
  TableEntry t = restricted_root_datum(L.group());
  int k = L.rank();
  for (const auto& [label, dim] : t.root_space_dims) {
    Root a(k, 0);
    if (label == "e_i-e_j") a = Root{1, -1}, a.resize(k, 0);
    else if (label == "e_i+-e_j") a[0] = 1, a[1] = -1;
    else if (label == "e_i") a[0] = 1;
    else if (label == "2e_i") a[0] = 2;
    r.expect(L.root_space_dim(a) == dim, gname + ": root space " + label + " has dimension " +
                                             std::to_string(L.root_space_dim(a)) + ", table says " + std::to_string(dim));
  }

  for (const auto& A : L.a_basis()) {
    r.expect(L.theta(A) == -A, gname + ": a not in p");
    for (const auto& m : L.m_basis()) r.expect(commutator(A, m).is_zero_matrix(), gname + ": m does not centralize a");
    for (const auto& m : L.m_finite()) r.expect(m * A == A * m, gname + ": finite M generator moves a");
  }
  for (const auto& m : L.m_finite()) r.expect(preserves_forms(L, to_gauss(m)), gname + ": finite M generator not in K");

  HeckeAlgebra H = HeckeAlgebra::for_group(L.group());
  auto refl = H.roots().simple_reflections();
  for (const auto& rd : L.reflections()) {
    std::string tag = gname + " generator " + std::to_string(rd.generator + 1);
    r.expect(preserves_forms(L, rd.k), tag + ": k_alpha not in K");
    auto kinv = inverse(rd.k);
    r.expect(kinv.has_value(), tag + ": k_alpha singular");
    if (!kinv) continue;
    const WeylElement& s = refl[rd.generator];
    for (int j = 0; j < k; ++j) {
      GMatrix img = rd.k * to_gauss(L.a_basis()[j]) * *kinv;
      GMatrix want = to_gauss(L.a_basis()[s.perm()[j]]) * GaussRational(s.sign()[j]);
      r.expect(img == want, tag + ": Ad(k_alpha) does not induce the reflection on A_" + std::to_string(j + 1));
    }
    GMatrix k2 = rd.k * rd.k;
    for (const auto& A : L.a_basis())
      r.expect(k2 * to_gauss(A) == to_gauss(A) * k2, tag + ": k_alpha^2 not in M");
    if (!rd.alpha) continue;
    const Root& al = *rd.alpha;
    r.expect(L.sigma(rd.X) == rd.X, tag + ": X_alpha not in the real form");
    for (int j = 0; j < k; ++j) {
      GMatrix ad = commutator(to_gauss(L.a_basis()[j]), rd.X);
      r.expect(ad == rd.X * GaussRational(al[j]), tag + ": X_alpha not in the root space " + rstr(al));
    }
    r.expect(L.kappa(rd.X, L.theta(rd.X)) == GaussRational(Rational(-2) / L.norm2(al)),
             tag + ": kappa(X, theta X) != -2/|alpha|^2");
    r.expect(rd.Z == rd.X + L.theta(rd.X), tag + ": Z != X + theta X");
    r.expect(exp_pi_half(rd.Z) == rd.k, tag + ": k != exp(pi Z / 2)");
  }
  return r;
}

}  // namespace gaha
