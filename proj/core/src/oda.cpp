#include "gaha/oda.hpp"

#include <random>
#include <stdexcept>

#include "gaha/sparse.hpp"

namespace gaha {

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

struct Slots {
  std::size_t N;
  int k;
  std::size_t stride(int i) const { return ipow(N, k - i); }
  std::size_t digit(std::size_t t, int i) const { return (t / stride(i)) % N; }
};

void accumulate(SparseRow& row, std::size_t col, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = row.emplace(col, c);
  if (fresh) return;
  it->second += c;
  if (is_zero(it->second)) row.erase(it);
}

Poly collapse(const HeckeElement& h, int nvars) {
  Poly p(nvars);
  for (const auto& [w, q] : h.terms) p += q;
  return p;
}

std::vector<QMatrix> finite_generators(const LieModel& L) {
  std::vector<QMatrix> out = L.m_finite();
  for (const auto& r : L.reflections()) {
    bool real = true;
    for (std::size_t i = 0; i < r.k.rows(); ++i)
      for (std::size_t j = 0; j < r.k.cols(); ++j) real = real && r.k(i, j).is_real();
    if (real) out.push_back(real_part_checked(r.k));
  }
  return out;
}

XTensor apply_op(const SparseOp& op, const XTensor& T) {
  XTensor out(T.size());
  for (std::size_t i = 0; i < op.size(); ++i)
    for (const auto& [j, c] : op.row(i)) add_to(out[i], T[j], c);
  return out;
}

Vec to_vec(const Poly& p, std::map<Exponent, std::size_t>& index) {
  Vec v(index.size(), Rational(0));
  for (const auto& [e, c] : p.terms()) {
    auto it = index.find(e);
    if (it == index.end()) {
      it = index.emplace(e, index.size()).first;
      v.push_back(Rational(0));
    }
    v[it->second] = c;
  }
  return v;
}

std::string poly_str(const Poly& p) { return p.to_string(); }

}  // namespace

XTensor operator+(const XTensor& a, const XTensor& b) {
  XTensor out = a;
  for (std::size_t i = 0; i < b.size(); ++i) add_to(out[i], b[i]);
  return out;
}

XTensor scaled(const XTensor& a, const Rational& c) {
  XTensor out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) add_to(out[i], a[i], c);
  return out;
}

HomSpace equivariant_homs(const Enveloping& U, const TensorSpace& ts, int d, std::size_t cap) {
  const LieModel& L = U.model();
  HomSpace hs;
  hs.degree = d;
  hs.words = truncated_words(U, d);
  std::map<Word, std::size_t> widx;
  for (std::size_t i = 0; i < hs.words.size(); ++i) widx.emplace(hs.words[i], i);
  const std::size_t nw = hs.words.size(), D = ts.dim();
  const std::size_t nunk = D * nw;
  if (nunk > cap) throw std::length_error("equivariant_homs: " + std::to_string(nunk) + " unknowns exceeds the cap");
  Slots sl{static_cast<std::size_t>(L.dim_v()), ts.slots()};
  auto locate = [&](const Word& w) {
    auto it = widx.find(w);
    if (it == widx.end()) throw std::logic_error("equivariant_homs: degree grew under K");
    return it->second;
  };

  SparseSystem sys(nunk);
  for (const auto& X : L.k_basis()) {
    std::vector<std::vector<std::pair<std::size_t, Rational>>> img(nw);
    for (std::size_t w = 0; w < nw; ++w)
      for (const auto& [w2, c] : U.left(X, UElem{{hs.words[w], Rational(1)}})) img[w].emplace_back(locate(w2), c);
    Rational dm = ts.mu().differential(L, X);
    std::map<std::size_t, SparseRow> eq;
    for (std::size_t t = 0; t < D; ++t)
      for (std::size_t w = 0; w < nw; ++w) {
        std::size_t u = t * nw + w;
        for (int s = 1; s <= ts.slots(); ++s) {
          std::size_t a0 = sl.digit(t, s);
          for (std::size_t a = 0; a < sl.N; ++a) {
            const Rational& c = X(a, a0);
            if (is_zero(c)) continue;
            std::size_t t2 = t + a * sl.stride(s) - a0 * sl.stride(s);
            accumulate(eq[t2 * nw + w], u, c);
          }
        }
        for (const auto& [w2, c] : img[w]) accumulate(eq[t * nw + w2], u, c);
        if (!is_zero(dm)) accumulate(eq[u], u, -dm);
      }
    for (auto& [_, row] : eq)
      if (!row.empty()) sys.add(std::move(row));
  }
  for (const auto& g : finite_generators(L)) {
    QMatrix G = real_part_checked(ts.group(to_gauss(g)));
    std::vector<std::vector<std::pair<std::size_t, Rational>>> img(nw);
    for (std::size_t w = 0; w < nw; ++w)
      for (const auto& [w2, c] : U.adjoint(g, UElem{{hs.words[w], Rational(1)}})) img[w].emplace_back(locate(w2), c);
    std::map<std::size_t, SparseRow> eq;
    for (std::size_t t = 0; t < D; ++t)
      for (std::size_t w = 0; w < nw; ++w) {
        std::size_t u = t * nw + w;
        for (std::size_t t2 = 0; t2 < D; ++t2) {
          if (is_zero(G(t2, t))) continue;
          for (const auto& [w2, c] : img[w]) accumulate(eq[t2 * nw + w2], u, G(t2, t) * c);
        }
        accumulate(eq[u], u, Rational(-1));
      }
    for (auto& [_, row] : eq)
      if (!row.empty()) sys.add(std::move(row));
  }
  for (const auto& v : sys.nullspace()) {
    XTensor T(D);
    for (std::size_t i = 0; i < nunk; ++i)
      if (!is_zero(v[i])) add_to(T[i / nw], hs.words[i % nw], v[i]);
    hs.homs.push_back(std::move(T));
  }
  return hs;
}

UElem pair_with(const XTensor& T, const Vec& u) {
  UElem out;
  for (std::size_t t = 0; t < T.size(); ++t)
    if (!is_zero(u[t])) add_to(out, T[t], u[t]);
  return out;
}

XTensor slot_action(const TensorSpace& ts, const XTensor& T, const QMatrix& a, int i) {
  Slots sl{static_cast<std::size_t>(ts.model().dim_v()), ts.slots()};
  XTensor out(T.size());
  for (std::size_t t = 0; t < T.size(); ++t) {
    if (T[t].empty()) continue;
    std::size_t a0 = sl.digit(t, i);
    for (std::size_t b = 0; b < sl.N; ++b)
      if (!is_zero(a(b, a0))) add_to(out[t + b * sl.stride(i) - a0 * sl.stride(i)], T[t], a(b, a0));
  }
  return out;
}

XTensor omega_zero(const Enveloping& U, const TensorSpace& ts, const XTensor& T, int i, OmegaPart part) {
  const LieModel& L = U.model();
  XTensor out(T.size());
  for (std::size_t b = 0; b < L.basis().size(); ++b) {
    const auto& E = L.basis()[b];
    if ((part == OmegaPart::K && !E.in_k) || (part == OmegaPart::P && E.in_k)) continue;
    XTensor ET(T.size());
    for (std::size_t t = 0; t < T.size(); ++t)
      if (!T[t].empty()) ET[t] = U.left(E.m, T[t]);
    out = out + slot_action(ts, ET, L.dual_of(b), i);
  }
  return out;
}

// --- OdaMap

OdaMap::OdaMap(std::shared_ptr<const Enveloping> U, std::shared_ptr<const HeckeAlgebra> H)
    : U_(std::move(U)), H_(std::move(H)) {
  if (U_->num_a() != H_->nvars()) throw std::invalid_argument("OdaMap: rank mismatch");
  for (int i = 0; i < H_->nvars(); ++i) opp_.push_back(H_->opposite_generator(i));
}

Poly OdaMap::gamma_shifted(const UElem& x) const { return U_->gamma0(x).shifted(U_->model().rho()); }

Poly OdaMap::opposite(const Poly& q) const {
  HeckeElement sum = H_->zero();
  for (const auto& [e, c] : q.terms()) {
    HeckeElement m = H_->one();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int j = 0; j < e[i]; ++j) m = H_->mul(m, opp_[i]);
    sum += m * c;
  }
  return collapse(sum, H_->nvars());
}

Poly OdaMap::act(const HeckeElement& h, const Poly& x) const { return collapse(H_->mul(h, H_->poly(x)), H_->nvars()); }

Vec OdaMap::at(const PSModule& ps, const Poly& x) const {
  return ps.action(H_->poly(x)).apply(ps.spherical_vector());
}

// --- the suite

namespace {

// normal form by always rewriting the rightmost descent; no cache
UElem normal_rightmost(const Enveloping& U, const Word& w) {
  int p = static_cast<int>(w.size()) - 2;
  while (p >= 0 && w[p] <= w[p + 1]) --p;
  if (p < 0) return UElem{{w, Rational(1)}};
  Word sw = w;
  std::swap(sw[p], sw[p + 1]);
  UElem res = normal_rightmost(U, sw);
  for (const auto& [l, c] : U.bracket(w[p], w[p + 1])) {
    Word b(w.begin(), w.begin() + p);
    b.push_back(l);
    b.insert(b.end(), w.begin() + p + 2, w.end());
    add_to(res, normal_rightmost(U, b), c);
  }
  return res;
}

CheckResult pbw_check(const Enveloping& U) {
  CheckResult r = U.check_structure();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> letter(0, U.size() - 1);
  auto random_word = [&](int len) {
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(letter(rng));
    return w;
  };
  for (int trial = 0; trial < 30; ++trial) {
    Word a = random_word(2), b = random_word(1), c = random_word(1);
    UElem ua{{a, 1}}, ub{{b, 1}}, uc{{c, 1}};
    UElem left = U.normal(concat(U.normal(concat(ua, ub)), uc));
    UElem right = U.normal(concat(ua, U.normal(concat(ub, uc))));
    r.expect(left == right, "PBW reduction is not associative");
    Word w = random_word(4);
    r.expect(U.normal(UElem{{w, 1}}) == normal_rightmost(U, w), "rewrite order changes the normal form");
    // two representatives of one coset
    Word k{U.num_n() + U.num_a() + static_cast<int>(rng() % U.num_k())};
    UElem rep{{w, 1}};
    add_to(rep, concat(UElem{{random_word(2), 1}}, UElem{{k, 1}}));
    r.expect(U.coset(rep) == U.coset(UElem{{w, 1}}), "coset reduction depends on the representative");
  }
  return r;
}

CheckResult hom_invariance(const Enveloping& U, const TensorSpace& ts, const HomSpace& hs) {
  CheckResult r;
  const LieModel& L = U.model();
  r.expect(!hs.homs.empty(), "no equivariant homs");
  for (std::size_t h = 0; h < hs.homs.size(); ++h) {
    const XTensor& T = hs.homs[h];
    for (const auto& X : L.k_basis()) {
      XTensor s(T.size());
      for (std::size_t t = 0; t < T.size(); ++t)
        if (!T[t].empty()) s[t] = U.left(X, T[t]);
      for (int i = 1; i <= ts.slots(); ++i) s = s + slot_action(ts, T, X, i);
      s = s + scaled(T, -ts.mu().differential(L, X));
      bool zero = true;
      for (const auto& x : s) zero = zero && x.empty();
      r.expect(zero, "hom " + std::to_string(h) + " is not k-invariant");
    }
  }
  return r;
}

}  // namespace

std::vector<OdaReport> oda_suite(const GroupDescriptor& g, const OdaOptions& opt) {
  std::vector<OdaReport> out;
  auto L = std::make_shared<const LieModel>(LieModel::build(g));
  auto U = std::make_shared<const Enveloping>(L);
  auto H = std::make_shared<const HeckeAlgebra>(HeckeAlgebra::for_group(g));
  const int k = L->rank();
  TensorSpace ts(L, k);
  OdaMap oda(U, H);
  const std::string name = g.name();

  out.push_back({"pbw_structure", pbw_check(*U)});

  HomSpace hs = equivariant_homs(*U, ts, opt.degree);
  out.push_back({"equivariant_homs", hom_invariance(*U, ts, hs)});

  auto basis = closed_form_basis(ts);
  const Vec& uid = basis.at(0);
  std::vector<QMatrix> kact;
  for (const auto& refl : L->reflections()) {
    GMatrix a = ts.group(refl.k);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (!a(i, j).is_real())
          throw std::invalid_argument("oda_suite: the k_alpha action on V^{(x)k} is not real for " + name);
    kact.push_back(real_part_checked(a));
  }

  // injectivity on the truncated space
  {
    CheckResult r;
    std::map<Exponent, std::size_t> index;
    std::vector<Vec> cols;
    for (const auto& T : hs.homs) cols.push_back(to_vec(oda.gamma_map(T, uid), index));
    for (auto& c : cols) c.resize(index.size(), Rational(0));
    std::size_t rk = cols.empty() ? 0 : rank(from_columns(cols, index.size()));
    r.expect(rk == hs.homs.size(), name + ": Gamma has rank " + std::to_string(rk) + " on " +
                                       std::to_string(hs.homs.size()) + " homs");
    out.push_back({"oda_injective", r});
  }

  // W-equivariance, in X
  std::vector<std::vector<Poly>> gam(hs.homs.size());
  {
    CheckResult r;
    for (std::size_t h = 0; h < hs.homs.size(); ++h) {
      for (const auto& u : basis) gam[h].push_back(oda.gamma_map(hs.homs[h], u));
      for (std::size_t gi = 0; gi < kact.size(); ++gi) {
        HeckeElement s = H->group(H->generator_element(L->reflections()[gi].generator));
        for (std::size_t b = 0; b < basis.size(); ++b) {
          Poly lhs = oda.gamma_map(hs.homs[h], kact[gi].apply(basis[b]));
          Poly rhs = oda.act(s, gam[h][b]);
          r.expect(lhs == rhs, name + ": Gamma(k u) != s Gamma(u) for hom " + std::to_string(h) + ", generator " +
                                   std::to_string(gi) + ": " + poly_str(lhs) + " vs " + poly_str(rhs));
        }
      }
    }
    out.push_back({"oda_w_equivariant", r});
  }

  // f~_i . Gamma = Gamma(Omega^p_{0,i} .), in X
  std::vector<std::vector<XTensor>> om(hs.homs.size());
  {
    CheckResult r;
    for (std::size_t h = 0; h < hs.homs.size(); ++h)
      for (int i = 1; i <= k; ++i) {
        om[h].push_back(omega_zero(*U, ts, hs.homs[h], i, OmegaPart::P));
        std::vector<Rational> e(k, Rational(0));
        e[i - 1] = 1;
        HeckeElement f = H->drinfeld_lift(e);
        // on u_id; the other basis vectors follow by W-equivariance
        Poly lhs = oda.gamma_map(om[h].back(), uid);
        Poly rhs = oda.act(f, gam[h][0]);
        r.expect(lhs == rhs, name + ": Gamma(f~_" + std::to_string(i) + " Y) != f~_" + std::to_string(i) +
                                 " Gamma(Y) for hom " + std::to_string(h) + ": " + poly_str(lhs) + " vs " +
                                 poly_str(rhs));
      }
    out.push_back({"oda_intertwining", r});
  }

  // the same at each nu, through X_1(nu); the Hecke side is the module's matrices
  {
    CheckResult r, rw;
    SymbolicPS sym(H);
    for (const auto& nu : opt.nus) {
      PSModule ps = sym.at(nu);
      for (std::size_t h = 0; h < hs.homs.size(); ++h) {
        Vec base = oda.at(ps, gam[h][0]);
        for (int i = 1; i <= k; ++i) {
          std::vector<Rational> e(k, Rational(0));
          e[i - 1] = 1;
          r.expect(oda.at(ps, oda.gamma_map(om[h][i - 1], uid)) == ps.drinfeld(e).apply(base),
                   name + ": nu-level f~_" + std::to_string(i) + " identity fails for hom " + std::to_string(h));
        }
        for (std::size_t gi = 0; gi < kact.size(); ++gi)
          rw.expect(oda.at(ps, oda.gamma_map(hs.homs[h], kact[gi].apply(uid))) ==
                        ps.simple(L->reflections()[gi].generator).apply(base),
                    name + ": nu-level W action differs for hom " + std::to_string(h));
      }
    }
    out.push_back({"oda_intertwining_nu", r});
    out.push_back({"oda_w_parts_nu", rw});
  }

  // slot-0 operator identities
  if (L->has_xi()) {
    CheckResult r;
    for (std::size_t h = 0; h < hs.homs.size(); ++h) {
      const XTensor& T = hs.homs[h];
      for (int j = 1; j <= k; ++j) {
        QMatrix sb = L->xi() * Rational(-1);
        XTensor om0 = omega_zero(*U, ts, T, j, OmegaPart::Full);
        XTensor lhs = slot_action(ts, om0, sb, j) + omega_zero(*U, ts, slot_action(ts, T, sb, j), j, OmegaPart::Full);
        XTensor rhs = scaled(slot_action(ts, omega_zero(*U, ts, T, j, OmegaPart::K), sb, j), Rational(2));
        r.expect(lhs == rhs, name + ": sbar Omega_{0,j} + Omega_{0,j} sbar != 2 sbar Omega^k_{0,j}, j = " +
                                 std::to_string(j));
      }
    }
    out.push_back({"omk_slot0", r});
  }
  if (L->has_xi() && k == 1) {
    // sbar eps + eps sbar = -2 sbar (Q_mu), eps = Omega_{0,1}; the sign follows the one above
    CheckResult r;
    QMatrix Q(L->dim_v(), L->dim_v());
    for (std::size_t b = 0; b < L->basis().size(); ++b) {
      const auto& E = L->basis()[b];
      if (!E.in_k) continue;
      QMatrix Es = L->dual_of(b);
      Q += E.m * Es - Es * ts.mu().differential(*L, E.m);
    }
    QMatrix sb = L->xi() * Rational(-1);
    for (const auto& T : hs.homs) {
      XTensor lhs = slot_action(ts, omega_zero(*U, ts, T, 1, OmegaPart::Full), sb, 1) +
                    omega_zero(*U, ts, slot_action(ts, T, sb, 1), 1, OmegaPart::Full);
      XTensor rhs = slot_action(ts, T, sb * Q * Rational(-2), 1);
      r.expect(lhs == rhs, name + ": sbar eps + eps sbar != -2 sbar Q_mu");
    }
    out.push_back({"sbar_slot0", r});
  }
  if (k >= 2) {
    // s eps_l - eps_{l+1} s = -Omega_{l,l+1} s with eps_l = sum_{0<=i<l} Omega_{i,l}
    CheckResult r;
    auto eps = [&](const XTensor& T, int l) {
      XTensor x = omega_zero(*U, ts, T, l, OmegaPart::Full);
      for (int i = 1; i < l; ++i) x = x + apply_op(ts.omega_op(i, l), T);
      return x;
    };
    for (std::size_t h = 0; h < hs.homs.size(); ++h)
      for (int l = 1; l < k; ++l) {
        SparseOp s = ts.transposition_op(l, l + 1);
        const XTensor& T = hs.homs[h];
        XTensor lhs = apply_op(s, eps(T, l)) + scaled(eps(apply_op(s, T), l + 1), Rational(-1));
        XTensor rhs = scaled(apply_op(ts.omega_op(l, l + 1), apply_op(s, T)), Rational(-1));
        r.expect(lhs == rhs, name + ": s eps_l - eps_{l+1} s != -Omega s at l = " + std::to_string(l));
      }
    out.push_back({"akact_slot0", r});
  }
  return out;
}

// --- Hermitian transfer

SphericalFunctional::SphericalFunctional(const Enveloping& U, int degree) : U_(U) {
  const LieModel& L = U.model();
  words_ = truncated_words(U, degree);
  for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], i);
  const std::size_t n = words_.size();
  // operators on the truncated coset space, as columns
  std::vector<std::vector<SparseRow>> ops;
  auto column_op = [&](auto&& image) {
    std::vector<SparseRow> cols(n);
    for (std::size_t w = 0; w < n; ++w)
      for (const auto& [w2, c] : image(UElem{{words_[w], Rational(1)}})) accumulate(cols[w], index_.at(w2), c);
    return cols;
  };
  for (const auto& X : L.k_basis()) ops.push_back(column_op([&](const UElem& u) { return U.left(X, u); }));
  for (const auto& g : finite_generators(L)) {
    auto cols = column_op([&](const UElem& u) { return U.adjoint(g, u); });
    for (std::size_t w = 0; w < n; ++w) accumulate(cols[w], w, Rational(-1));
    ops.push_back(std::move(cols));
  }
  // invariants: common kernel; coinvariant functionals: kill every column
  SparseSystem inv_sys(n), fun_sys(n);
  for (const auto& cols : ops) {
    std::vector<SparseRow> rows(n);
    for (std::size_t w = 0; w < n; ++w)
      for (const auto& [i, c] : cols[w]) rows[i][w] = c;
    for (auto& row : rows)
      if (!row.empty()) inv_sys.add(std::move(row));
    for (const auto& col : cols)
      if (!col.empty()) fun_sys.add(col);
  }
  auto inv = inv_sys.nullspace();
  auto fun = fun_sys.nullspace();
  if (inv.size() != fun.size()) throw std::logic_error("SphericalFunctional: K action is not semisimple here");
  const std::size_t m = inv.size();
  QMatrix P(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t w = 0; w < n; ++w) P(i, j) += fun[i][w] * inv[j][w];
  QMatrix Pi = *inverse(P);
  // P_K(word) = sum_j inv_j (Pi fun(word))_j; keep its pure-a part
  std::vector<UElem> ga(m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t w = 0; w < n; ++w)
      if (!is_zero(inv[j][w])) {
        bool pure = true;
        for (int l : words_[w]) pure = pure && U.is_a(l);
        if (pure) add_to(ga[j], words_[w], inv[j][w]);
      }
  weights_.resize(n);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t j = 0; j < m; ++j) {
      Rational c(0);
      for (std::size_t i = 0; i < m; ++i) c += Pi(j, i) * fun[i][w];
      if (!is_zero(c)) add_to(weights_[w], ga[j], c);
    }
}

Rational SphericalFunctional::operator()(const UElem& z, const std::vector<Rational>& nu) const {
  UElem y = U_.coset(z);
  std::vector<Rational> pt = nu;
  const auto& rho = U_.model().rho();
  for (std::size_t i = 0; i < pt.size(); ++i) pt[i] += rho[i];
  Rational out(0);
  for (const auto& [w, c] : y) {
    auto it = index_.find(w);
    if (it == index_.end()) throw std::out_of_range("SphericalFunctional: degree above the truncation");
    out += c * U_.gamma0(weights_[it->second]).eval(pt);
  }
  return out;
}

Rational SphericalFunctional::pairing(const UElem& x, const UElem& y, const std::vector<Rational>& nu) const {
  return (*this)(concat(U_.dagger(y), x), nu);
}

HermitianTransfer hermitian_transfer(const GroupDescriptor& g, int degree, const std::vector<std::vector<Rational>>& nus) {
  HermitianTransfer out;
  CheckResult& r = out.result;
  auto L = std::make_shared<const LieModel>(LieModel::build(g));
  auto U = std::make_shared<const Enveloping>(L);
  auto H = std::make_shared<const HeckeAlgebra>(HeckeAlgebra::for_group(g));
  TensorSpace ts(L, L->rank());
  OdaMap oda(U, H);
  HomSpace hs = equivariant_homs(*U, ts, degree);
  SphericalFunctional phi(*U, 2 * degree);
  const Vec uid = closed_form_basis(ts).at(0);
  SymbolicPS sym(H);
  const std::size_t m = hs.homs.size();
  for (const auto& nu : nus) {
    std::string at = g.name() + " at nu = (";
    for (std::size_t i = 0; i < nu.size(); ++i) at += (i ? "," : "") + nu[i].get_str();
    at += ")";
    PSModule ps = sym.at(nu);
    InvariantForm F = hermitian_form(ps);
    if (F.status != FormStatus::Hermitian) {
      r.expect(false, at + ": no Hecke-side form (" + to_string(F.status) + ")");
      continue;
    }
    // product form, coordinate form on V
    QMatrix G(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        Rational s(0);
        for (std::size_t t = 0; t < ts.dim(); ++t)
          if (!hs.homs[i][t].empty() && !hs.homs[j][t].empty()) s += phi.pairing(hs.homs[i][t], hs.homs[j][t], nu);
        G(i, j) = s;
        G(j, i) = s;
      }
    std::vector<Vec> cols;
    for (const auto& T : hs.homs) cols.push_back(oda.at(ps, oda.gamma_map(T, uid)));
    QMatrix M = from_columns(cols, ps.dim());
    QMatrix B = M.transpose() * F.matrix * M;
    // one scalar, positive
    std::optional<Rational> c;
    for (std::size_t i = 0; i < m && !c; ++i)
      for (std::size_t j = 0; j < m && !c; ++j)
        if (!is_zero(B(i, j))) c = G(i, j) / B(i, j);
    r.expect(c.has_value(), at + ": transported Hecke form vanishes on the homs");
    if (!c) continue;
    r.expect(sgn(*c) > 0, at + ": scalar " + c->get_str() + " is not positive");
    r.expect(G == B * *c, at + ": the induced form is not a multiple of the Hecke-side form");
    r.expect(rank(M) == ps.dim(), at + ": the homs do not reach all of X_1(nu)");
    out.points.push_back({nu, *c, signature(F.matrix), signature(G)});
  }
  return out;
}

}  // namespace gaha
