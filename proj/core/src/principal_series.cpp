#include "gaha/principal_series.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "gaha/sparse.hpp"

namespace gaha {

SphericalParameter make_parameter(const HeckeAlgebra& H, std::vector<Rational> nu) {
  if (static_cast<int>(nu.size()) != H.nvars()) throw std::invalid_argument("nu has the wrong number of coordinates");
  SphericalParameter p;
  p.nu = std::move(nu);
  p.dominant = true;
  for (std::size_t g = 0; g < H.num_simple(); ++g) {
    const Root& a = H.positive_root(H.simple_root_index(g));
    if (sgn(HeckeAlgebra::pair(p.nu, a)) < 0) p.dominant = false;
  }
  return p;
}

// --- PSModule

PSModule::PSModule(std::shared_ptr<const HeckeAlgebra> H, SphericalParameter nu, std::vector<QMatrix> eps)
    : H_(std::move(H)), nu_(std::move(nu)), eps_(std::move(eps)) {}

QMatrix PSModule::group(std::size_t w) const {
  QMatrix m(dim(), dim());
  for (std::size_t v = 0; v < dim(); ++v) m(H_->wmul(w, v), v) = 1;
  return m;
}

QMatrix PSModule::linear(const std::vector<Rational>& f) const {
  QMatrix m(dim(), dim());
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!is_zero(f[i])) m += eps_[i] * f[i];
  return m;
}

QMatrix PSModule::drinfeld(const std::vector<Rational>& f) const {
  QMatrix m = linear(f);
  for (std::size_t b = 0; b < H_->num_positive(); ++b) {
    Rational coef = H_->c(b) * HeckeAlgebra::pair(f, H_->positive_root(b)) / 2;
    if (!is_zero(coef)) m -= group(H_->reflection_index(b)) * coef;
  }
  return m;
}

QMatrix PSModule::star_eps(int i) const {
  QMatrix m = -eps_[i];
  for (std::size_t b = 0; b < H_->num_positive(); ++b) {
    Rational coef = H_->c(b) * H_->positive_root(b)[i];
    if (!is_zero(coef)) m += group(H_->reflection_index(b)) * coef;
  }
  return m;
}

QMatrix PSModule::action(const HeckeElement& h) const {
  QMatrix out(dim(), dim());
  for (const auto& [w, p] : h.terms) {
    QMatrix pm(dim(), dim());
    for (const auto& [e, c] : p.terms()) {
      QMatrix m = QMatrix::identity(dim());
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) m = m * eps_[i];
      pm += m * c;
    }
    out += pm * group(w);
  }
  return out;
}

std::vector<Rational> PSModule::spherical_vector() const { return std::vector<Rational>(dim(), Rational(1)); }

std::vector<Rational> PSModule::highest_vector() const {
  std::vector<Rational> v(dim(), Rational(0));
  v[0] = 1;
  return v;
}

// --- SymbolicPS

SymbolicPS::SymbolicPS(std::shared_ptr<const HeckeAlgebra> H, int max_rank) : H_(std::move(H)) {
  if (H_->roots().rank > max_rank) throw std::length_error("module builds are limited to rank " + std::to_string(max_rank));
  std::size_t n = H_->weyl().size();
  int k = H_->nvars();
  for (int i = 0; i < k; ++i) {
    PolyMatrix m(n, n, Poly(k));
    for (std::size_t w = 0; w < n; ++w) {
      HeckeElement h = H_->zero();
      h.add(w, Poly::variable(k, i));
      for (const auto& [u, r] : H_->to_right_form(h)) m(u, w) = r;
    }
    eps_.push_back(std::move(m));
  }
}

PSModule SymbolicPS::at(const std::vector<Rational>& nu) const {
  SphericalParameter p = make_parameter(*H_, nu);
  std::vector<QMatrix> eps;
  for (const auto& pm : eps_) {
    QMatrix m(pm.rows(), pm.cols());
    for (std::size_t i = 0; i < pm.rows(); ++i)
      for (std::size_t j = 0; j < pm.cols(); ++j)
        if (!pm(i, j).is_zero()) m(i, j) = pm(i, j).eval(p.nu);
    eps.push_back(std::move(m));
  }
  return PSModule(H_, std::move(p), std::move(eps));
}

// --- checks

CheckResult check_module_relations(const PSModule& ps) {
  const HeckeAlgebra& H = ps.algebra();
  CheckResult r;
  int k = H.nvars();
  std::size_t n = ps.dim();
  QMatrix I = QMatrix::identity(n);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      r.expect(ps.eps(i) * ps.eps(j) == ps.eps(j) * ps.eps(i), "eps commute " + std::to_string(i + 1) + "," + std::to_string(j + 1));

  for (std::size_t g = 0; g < H.num_simple(); ++g) {
    QMatrix s = ps.simple(g);
    r.expect(s * s == I, H.generator_name(g) + "^2 = 1");
    for (std::size_t h = g + 1; h < H.num_simple(); ++h) {
      QMatrix t = ps.simple(h);
      std::size_t gh = H.wmul(H.generator_element(g), H.generator_element(h)), x = gh;
      int m = 1;
      while (x != H.identity()) {
        x = H.wmul(x, gh);
        ++m;
      }
      QMatrix lhs = I, rhs = I;
      for (int a = 0; a < m; ++a) {
        lhs = lhs * (a % 2 ? t : s);
        rhs = rhs * (a % 2 ? s : t);
      }
      r.expect(lhs == rhs, "braid " + H.generator_name(g) + "," + H.generator_name(h));
    }
    std::size_t b = H.simple_root_index(g);
    const auto& sw = H.weyl().elements()[H.generator_element(g)];
    for (int i = 0; i < k; ++i) {
      std::vector<Rational> f(k, 0);
      f[i] = 1;
      QMatrix lhs = s * ps.linear(f) - ps.linear(sw.act(f)) * s;
      r.expect(lhs == I * (H.c(b) * HeckeAlgebra::pair(f, H.positive_root(b))),
               "cross relation " + H.generator_name(g) + " eps" + std::to_string(i + 1));
      r.expect(s * ps.drinfeld(f) == ps.drinfeld(sw.act(f)) * s, "drinfeld " + H.generator_name(g) + " eps" + std::to_string(i + 1));
    }
  }
  for (int i = 0; i < k; ++i) {
    std::vector<Rational> fi(k, 0);
    fi[i] = 1;
    for (int j = i + 1; j < k; ++j) {
      std::vector<Rational> fj(k, 0);
      fj[j] = 1;
      QMatrix a = ps.drinfeld(fi), b = ps.drinfeld(fj);
      QMatrix A = ps.linear(fi) - a, B = ps.linear(fj) - b;
      r.expect(a * b - b * a == B * A - A * B, "drinfeld commutator");
    }
    auto v = ps.eps(i).apply(ps.highest_vector());
    auto expect = ps.highest_vector();
    for (auto& x : expect) x *= ps.parameter().nu[i];
    r.expect(v == expect, "eps" + std::to_string(i + 1) + " on 1(x)1");
  }
  return r;
}

std::size_t krylov_dimension(const PSModule& ps) {
  const HeckeAlgebra& H = ps.algebra();
  std::vector<QMatrix> gens;
  for (std::size_t g = 0; g < H.num_simple(); ++g) gens.push_back(ps.simple(g));
  for (int i = 0; i < H.nvars(); ++i) gens.push_back(ps.eps(i));
  std::size_t n = ps.dim();
  SparseSystem span(n);  // rows are the spanning vectors
  std::vector<std::vector<Rational>> queue{ps.highest_vector()};
  auto to_row = [](const std::vector<Rational>& v) {
    SparseRow row;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) row[i] = v[i];
    return row;
  };
  span.add(to_row(queue[0]));
  for (std::size_t head = 0; head < queue.size() && span.rank() < n; ++head)
    for (const auto& g : gens) {
      auto v = g.apply(queue[head]);
      if (span.add(to_row(v))) queue.push_back(std::move(v));
    }
  return span.rank();
}

CheckResult check_regular_character(const PSModule& ps) {
  CheckResult r;
  for (std::size_t w = 0; w < ps.dim(); ++w) {
    Rational tr = ps.group(w).trace();
    r.expect(tr == (w == ps.algebra().identity() ? Rational(ps.dim()) : Rational(0)),
             "character at " + ps.algebra().element_name(w));
  }
  return r;
}

// --- forms

std::string to_string(FormStatus s) {
  switch (s) {
    case FormStatus::Hermitian: return "true";
    case FormStatus::NonHermitian: return "false";
    case FormStatus::Degenerate: return "degenerate";
  }
  return "?";
}

namespace {

using SparseCols = std::vector<std::vector<std::pair<std::size_t, Rational>>>;

SparseCols sparse_columns(const QMatrix& m) {
  SparseCols cols(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) cols[j].emplace_back(i, m(i, j));
  return cols;
}

}  // namespace

InvariantForm hermitian_form(const PSModule& ps) {
  const HeckeAlgebra& H = ps.algebra();
  std::size_t n = ps.dim();
  // group invariance forces F(w,v) = f(w^-1 v); symmetry forces f(g) = f(g^-1)
  std::vector<std::size_t> cls(n), reps;
  std::vector<std::size_t> unknown(n);
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t gi = H.winv(g);
    if (gi < g) {
      unknown[g] = unknown[gi];
    } else {
      unknown[g] = reps.size();
      reps.push_back(g);
    }
  }
  std::size_t nu = reps.size();
  auto var = [&](std::size_t w, std::size_t v) { return unknown[H.wmul(H.winv(w), v)]; };

  SparseSystem sys(nu);
  for (int i = 0; i < H.nvars() && sys.rank() < nu; ++i) {
    SparseCols P = sparse_columns(ps.eps(i)), S = sparse_columns(ps.star_eps(i));
    // (P^T F)(a,b) - (F S)(a,b) = 0. Row a = 0 is enough: with W-invariance
    // in place, eps_i w = w (w^-1 . eps_i) + (group terms) moves any other row
    // back to the first one.
    for (std::size_t a = 0; a < 1; ++a)
      for (std::size_t b = 0; b < n && sys.rank() < nu; ++b) {
        SparseRow row;
        for (const auto& [u, x] : P[a]) row[var(u, b)] += x;
        for (const auto& [u, x] : S[b]) row[var(a, u)] -= x;
        sys.add(std::move(row));
      }
  }
  InvariantForm out;
  for (const auto& sol : sys.nullspace()) {
    QMatrix F(n, n);
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t v = 0; v < n; ++v) F(w, v) = sol[var(w, v)];
    out.solutions.push_back(std::move(F));
  }
  if (out.solutions.empty()) {
    out.status = FormStatus::NonHermitian;
    return out;
  }
  if (out.solutions.size() > 1) {
    out.status = FormStatus::Degenerate;
    return out;
  }
  out.status = FormStatus::Hermitian;
  QMatrix F = out.solutions[0];
  auto sph = ps.spherical_vector();
  Rational ss = 0;
  for (const auto& x : F.apply(sph)) ss += x;
  Rational scale = 1;
  if (sgn(ss) < 0 || (sgn(ss) == 0 && sgn(F(0, 0)) < 0)) scale = -1;
  if (!is_zero(F(0, 0))) scale /= abs(F(0, 0));
  out.matrix = F * scale;
  out.solutions[0] = out.matrix;
  return out;
}

CheckResult check_form_invariance(const PSModule& ps, const QMatrix& F, int random_elements, std::uint64_t seed) {
  const HeckeAlgebra& H = ps.algebra();
  CheckResult r;
  r.expect(F == F.transpose(), "form is symmetric");
  for (std::size_t g = 0; g < H.num_simple(); ++g) {
    QMatrix s = ps.simple(g);
    r.expect(s.transpose() * F == F * s, "invariance under " + H.generator_name(g));
  }
  for (int i = 0; i < H.nvars(); ++i)
    r.expect(ps.eps(i).transpose() * F == F * ps.star_eps(i), "invariance under eps" + std::to_string(i + 1));
  std::mt19937_64 rng(seed);
  for (int t = 0; t < random_elements; ++t) {
    HeckeElement h = H.random_element(rng, 2, 3);
    r.expect(ps.action(h).transpose() * F == F * ps.action(H.star(h)), "invariance under a random element");
  }
  return r;
}

Quotient spherical_quotient(const PSModule& ps, const QMatrix& F) {
  std::size_t n = ps.dim();
  auto sph = ps.spherical_vector();
  auto fs = F.apply(sph);
  if (std::all_of(fs.begin(), fs.end(), [](const Rational& x) { return is_zero(x); }))
    throw std::logic_error("spherical vector lies in the radical");
  auto rad = nullspace(F);
  Quotient q;
  q.radical_dim = rad.size();
  // extend a radical basis by coordinate vectors to get a complement
  SparseSystem span(n);
  for (const auto& v : rad) {
    SparseRow row;
    for (std::size_t i = 0; i < n; ++i)
      if (!is_zero(v[i])) row[i] = v[i];
    span.add(row);
  }
  std::vector<std::size_t> comp;
  for (std::size_t i = 0; i < n && span.rank() < n; ++i)
    if (span.add(SparseRow{{i, Rational(1)}})) comp.push_back(i);
  q.dim = comp.size();
  q.form = QMatrix(q.dim, q.dim);
  for (std::size_t a = 0; a < q.dim; ++a)
    for (std::size_t b = 0; b < q.dim; ++b) q.form(a, b) = F(comp[a], comp[b]);
  q.inertia = signature(q.form);
  if (q.inertia.zero != 0) throw std::logic_error("induced form on the quotient is degenerate");
  return q;
}

std::vector<ScanRow> unitarity_scan(const SymbolicPS& sym, const std::vector<std::vector<Rational>>& grid, unsigned threads) {
  std::vector<ScanRow> rows(grid.size());
  auto work = [&](std::size_t i) {
    PSModule ps = sym.at(grid[i]);
    ScanRow& row = rows[i];
    row.nu = grid[i];
    row.dominant = ps.parameter().dominant;
    InvariantForm f = hermitian_form(ps);
    row.status = f.status;
    if (f.status != FormStatus::Hermitian) return;
    Quotient q = spherical_quotient(ps, f.matrix);
    row.radical_dim = q.radical_dim;
    row.inertia = q.inertia;
    row.unitary = q.dim > 0 && (q.inertia.neg == 0 || q.inertia.pos == 0);
  };
  if (threads == 0) threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, grid.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i; (i = next++) < grid.size();) work(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::vector<Rational> default_direction(const HeckeAlgebra& H) {
  int k = H.nvars();
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t g = 0; g < H.num_simple(); ++g) {
    std::size_t b = H.simple_root_index(g);
    const Root& a = H.positive_root(b);
    int aa = dot(a, a);
    std::vector<Rational> row;
    for (int x : a) row.push_back(make_rational(2 * x, aa));
    rows.push_back(row);
    rhs.push_back(1);
  }
  if (H.roots().type == RootType::A) {
    rows.emplace_back(k, Rational(1));
    rhs.push_back(0);
  }
  auto x = solve(QMatrix::from_rows(rows), rhs);
  if (!x) throw std::logic_error("no direction with unit coroot pairings");
  return *x;
}

std::vector<std::vector<Rational>> parse_line(const std::string& spec, const std::vector<Rational>& dir) {
  auto dots = spec.find("..");
  auto slash = spec.rfind('/');
  if (dots == std::string::npos || slash == std::string::npos || slash < dots)
    throw std::invalid_argument("line must look like a..b/n, got '" + spec + "'");
  Rational a = parse_rational(spec.substr(0, dots));
  Rational b = parse_rational(spec.substr(dots + 2, slash - dots - 2));
  std::string ns = spec.substr(slash + 1);
  if (ns.empty() || !std::all_of(ns.begin(), ns.end(), ::isdigit)) throw std::invalid_argument("bad step count in '" + spec + "'");
  long n = std::stol(ns);
  if (n < 1) throw std::invalid_argument("need at least one step");
  std::vector<std::vector<Rational>> pts;
  for (long i = 0; i <= n; ++i) {
    Rational t = a + (b - a) * Rational(i) / Rational(n);
    std::vector<Rational> nu;
    for (const auto& d : dir) nu.push_back(t * d);
    pts.push_back(std::move(nu));
  }
  return pts;
}

namespace {

std::string nu_string(const std::vector<Rational>& nu) {
  std::string s;
  for (std::size_t i = 0; i < nu.size(); ++i) s += (i ? ";" : "") + to_string(nu[i]);
  return s;
}

}  // namespace

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "nu,hermitian,radical_dim,pos,neg,zero,unitary\n";
  for (const auto& r : rows) {
    os << nu_string(r.nu) << ',' << to_string(r.status) << ',';
    if (r.status == FormStatus::Hermitian)
      os << r.radical_dim << ',' << r.inertia.pos << ',' << r.inertia.neg << ',' << r.inertia.zero << ','
         << (r.unitary ? "true" : "false");
    else
      os << "n/a,n/a,n/a,n/a,false";
    os << '\n';
  }
  return os.str();
}

std::string scan_json(const std::string& group, const std::vector<ScanRow>& rows) {
  nlohmann::ordered_json out;
  out["group"] = group;
  out["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["nu"] = nu_string(r.nu);
    j["hermitian"] = to_string(r.status);
    if (r.status == FormStatus::Hermitian) {
      j["radical_dim"] = r.radical_dim;
      j["pos"] = r.inertia.pos;
      j["neg"] = r.inertia.neg;
      j["zero"] = r.inertia.zero;
    } else {
      j["radical_dim"] = j["pos"] = j["neg"] = j["zero"] = "n/a";
    }
    j["unitary"] = r.unitary;
    out["rows"].push_back(j);
  }
  return out.dump(2) + "\n";
}

}  // namespace gaha
