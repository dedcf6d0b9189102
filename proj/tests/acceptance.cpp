// Acceptance run: one PASS/FAIL line per criterion. With arguments, only the
// listed criteria run. Exit status is the number of failed criteria.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "gaha/oda.hpp"
#include "gaha/principal_series.hpp"
#include "gaha/report.hpp"
#include "gaha/tensor_model.hpp"

using namespace gaha;

namespace {

struct Outcome {
  bool ok = true;
  long checks = 0;
  std::vector<std::string> failures;
  void expect(bool c, const std::string& what) {
    ++checks;
    if (!c) {
      ok = false;
      failures.push_back(what);
    }
  }
  void absorb(const CheckResult& r, const std::string& where) {
    checks += r.checks;
    if (!r.ok) {
      ok = false;
      failures.push_back(where + ": " + r.failure);
    }
  }
};

const std::vector<std::string> kGroups = {"GL(1,R)", "GL(2,R)", "GL(3,R)", "GL(4,R)", "U(1,1)",  "U(2,1)",
                                          "U(3,1)",  "U(4,1)",  "U(2,2)",  "U(3,2)",  "Sp(2,R)", "Sp(4,R)",
                                          "Sp(6,R)", "O(2,1)",  "O(3,1)",  "O(4,1)",  "O(2,2)",  "O(3,2)"};

long factorial(long n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::shared_ptr<const LieModel> model(const GroupDescriptor& g) {
  return std::make_shared<const LieModel>(LieModel::build(g));
}

// the table rows, typed in from the table itself
struct Row {
  std::string phi, phi_o, algebra, metadata;
  std::vector<std::string> c_lines;
  long weyl = 0;
};

std::string rat(long n, long d) { return to_string(make_rational(n, d)); }

Row table_row(const GroupDescriptor& g) {
  Row r;
  if (g.family == Family::GL) {
    r.phi = r.phi_o = "A" + std::to_string(g.n - 1);
    r.c_lines = {"c == 1"};
    r.algebra = "H_" + std::to_string(g.n);
    r.weyl = factorial(g.n);
    return r;
  }
  long q = g.family == Family::Sp ? g.n : g.q, p = g.p;
  std::string qs = std::to_string(q);
  r.weyl = factorial(q) << q;
  switch (g.family) {
    case Family::U:
      if (p == q) {
        r.phi = r.phi_o = "C" + qs;
        r.c_lines = {"c(short) = 2", "c(long) = 1"};
        r.algebra = "H~_" + qs + "(1/2)";
      } else {
        r.phi = "BC" + qs;
        r.phi_o = "B" + qs;
        r.c_lines = {"c(short) = 1", "c(long) = " + std::to_string(p - q + 1)};
        r.algebra = "H~_" + qs + "(" + rat(p - q + 1, 2) + ")";
      }
      break;
    case Family::Sp:
      r.phi = r.phi_o = "C" + qs;
      r.c_lines = {"c == 1"};
      r.algebra = "H~_" + qs + "(1)";
      break;
    default:
      if (p == q) {
        r.phi = r.phi_o = "D" + qs;
        r.c_lines = {"c == 1"};
        r.algebra = "H~_" + qs + "(0)";
        r.metadata = "H(D_" + qs + ",1) x| Z/2Z";
      } else {
        r.phi = r.phi_o = "B" + qs;
        r.c_lines = {"c(short) = 1", "c(long) = " + std::to_string(p - q)};
        r.algebra = "H~_" + qs + "(" + rat(p - q, 2) + ")";
      }
  }
  // rank one has no e_i +- e_j, so no short class
  if (q == 1 && r.c_lines.size() == 2) r.c_lines.erase(r.c_lines.begin());
  return r;
}

Rational table_param(const GroupDescriptor& g) {
  switch (g.family) {
    case Family::U: return g.p == g.q ? make_rational(1, 2) : make_rational(g.p - g.q + 1, 2);
    case Family::Sp: return 1;
    case Family::O: return make_rational(g.p - g.q, 2);
    default: return 0;
  }
}

Outcome table1() {
  Outcome o;
  for (const auto& s : kGroups) {
    auto g = parse_group(s);
    std::string text = info_text(g);
    std::map<std::string, std::string> kv;
    std::vector<std::string> clines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
      if (line.rfind("c ", 0) == 0 || line.rfind("c(", 0) == 0) clines.push_back(line);
      auto colon = line.find(": ");
      if (colon != std::string::npos) kv[line.substr(0, colon)] = line.substr(colon + 2);
    }
    Row r = table_row(g);
    o.expect(kv["Phi"] == r.phi, s + ": Phi " + kv["Phi"] + " != " + r.phi);
    o.expect(kv["Phi_o"] == r.phi_o, s + ": Phi_o " + kv["Phi_o"] + " != " + r.phi_o);
    o.expect(clines == r.c_lines, s + ": parameter lines differ");
    o.expect(kv["algebra"] == r.algebra, s + ": algebra " + kv["algebra"] + " != " + r.algebra);
    o.expect(kv["|W_R|"] == std::to_string(r.weyl), s + ": |W_R| " + kv["|W_R|"]);
    if (r.metadata.empty())
      o.expect(!kv.count("metadata"), s + ": unexpected metadata");
    else
      o.expect(kv["metadata"].find(r.metadata) != std::string::npos, s + ": metadata '" + kv["metadata"] + "'");
  }
  return o;
}

Outcome table2() {
  Outcome o;
  for (const auto& s : kGroups) {
    auto g = parse_group(s);
    if (g.family == Family::GL) continue;
    auto L = LieModel::build(g);
    long p = g.p, q = g.q;
    std::vector<Character> chars;
    if (g.family == Family::Sp)
      for (int m = 0; m <= 2; ++m) chars.push_back(Character{0, m});
    else
      for (int mp = 0; mp <= 1; ++mp)
        for (int mq = 0; mq <= 1; ++mq) chars.push_back(Character{mp, mq});
    for (const auto& mu : chars) {
      Rational r, c;
      switch (g.family) {
        case Family::U:
          r = make_rational(p + q - mu.m_p - mu.m_q, 2);
          c = make_rational(p - q + mu.m_q - mu.m_p, 2);
          break;
        case Family::Sp:
          r = g.n;
          c = mu.m_q;
          break;
        default:
          r = make_rational(p + q, 2) - 1;
          c = make_rational(p - q, 2);
      }
      auto got = q_mu_parameters(L, mu);
      std::string tag = s + " " + mu.to_string(g);
      o.expect(got.r == r, tag + ": r = " + to_string(got.r) + ", table " + to_string(r));
      o.expect(got.c == c, tag + ": c = " + to_string(got.c) + ", table " + to_string(c));
    }
    auto c0 = q_mu_parameters(L, Character::mu0(g)).c;
    o.expect(c0 == table_param(g), s + ": c_mu0 = " + to_string(c0) + " but the algebra parameter is " + to_string(table_param(g)));
  }
  return o;
}

Outcome dimension_law() {
  Outcome o;
  for (const auto& s : kGroups) {
    auto g = parse_group(s);
    auto L = model(g);
    int k = L->rank();
    TensorSpace ts(L, k);
    for (int m = 0; m < k; ++m) o.expect(invariants(ts, m).empty(), s + ": invariants at m = " + std::to_string(m));
    auto inv = invariants(ts, k);
    long w = table_row(g).weyl;
    o.expect(static_cast<long>(inv.size()) == w, s + ": " + std::to_string(inv.size()) + " invariants, |W_R| = " + std::to_string(w));
    o.absorb(dimension_check(ts), s);
  }
  return o;
}

Outcome operator_identities() {
  Outcome o;
  for (const auto& s : kGroups) {
    auto g = parse_group(s);
    auto L = model(g);
    o.absorb(check_model(*L), s + " lie model");
    if (L->has_xi()) o.absorb(omega_k_lemma_check(*L), s + " omega^k lemma");
    TensorSpace ts(L, L->rank());
    o.absorb(regular_rep_check(ts), s + " regular character");
    o.absorb(single_petal_check(ts), s + " single petal");
    o.absorb(weyl_match_check(ts), s + " weyl match");
    o.absorb(ak_relations_check(ts), s + " A_k relations");
    if (L->has_xi()) {
      o.absorb(kact_identity_check(ts), s + " k action");
      o.absorb(contraction_kernel_check(ts), s + " contraction kernel");
      o.absorb(sbar_anticommutator_check(ts), s + " sbar");
    }
  }
  return o;
}

// every algebra of criterion 5
std::vector<std::pair<std::string, std::shared_ptr<const HeckeAlgebra>>> algebras() {
  std::vector<std::pair<std::string, std::shared_ptr<const HeckeAlgebra>>> out;
  for (int n = 1; n <= 4; ++n) out.emplace_back("H_" + std::to_string(n), std::make_shared<const HeckeAlgebra>(HeckeAlgebra::graded_A(n)));
  std::vector<Rational> cs;
  for (const auto& s : kGroups) {
    auto g = parse_group(s);
    if (g.family == Family::GL) continue;
    Rational c = table_param(g);
    if (std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(c);
  }
  std::sort(cs.begin(), cs.end());
  for (int k = 1; k <= 3; ++k)
    for (const auto& c : cs)
      out.emplace_back("H~_" + std::to_string(k) + "(" + to_string(c) + ")",
                       std::make_shared<const HeckeAlgebra>(HeckeAlgebra::tilde(k, c)));
  return out;
}

Outcome hecke_integrity() {
  Outcome o;
  for (const auto& [name, H] : algebras()) {
    auto rep = H->verify_relations(100);
    o.checks += rep.checks;
    o.expect(rep.ok, name + ": " + rep.failure);
  }
  return o;
}

Outcome principal_series() {
  Outcome o;
  std::uint64_t seed = 21;
  for (const auto& [name, H] : algebras()) {
    SymbolicPS sym(H);
    for (const auto& nu : sample_nus(H->nvars(), 5, seed++)) {
      PSModule ps = sym.at(nu);
      o.absorb(check_module_relations(ps), name);
      auto v = ps.highest_vector();
      for (int i = 0; i < H->nvars(); ++i) {
        auto ev = ps.eps(i).apply(v);
        bool eig = true;
        for (std::size_t j = 0; j < v.size(); ++j) eig = eig && ev[j] == nu[i] * v[j];
        o.expect(eig, name + ": eps_" + std::to_string(i + 1) + " (1 (x) 1) != nu_i (1 (x) 1)");
      }
      o.expect(krylov_dimension(ps) == ps.dim(), name + ": 1 (x) 1 is not cyclic at a sampled nu");
    }
  }
  return o;
}

Outcome forms_and_unitarity() {
  Outcome o;
  for (const auto& [name, H] : algebras()) {
    SymbolicPS sym(H);
    PSModule ps = sym.at(std::vector<Rational>(H->nvars(), Rational(0)));
    InvariantForm f = hermitian_form(ps);
    if (f.status == FormStatus::Hermitian) {
      o.expect(signature(f.matrix) == Inertia{ps.dim(), 0, 0}, name + ": form at nu = 0 is not positive definite");
      o.absorb(check_form_invariance(ps, f.matrix), name);
    } else {
      // c = 0: a space of forms, which must contain a definite one
      o.expect(f.status == FormStatus::Degenerate, name + ": no invariant form at nu = 0");
      o.absorb(check_form_invariance(ps, QMatrix::identity(ps.dim())), name + " identity form");
    }
  }
  // A1 line, oracle: the form on span{1 (x) 1, s (x) 1} is [[1, t], [t, 1]]
  auto H = std::make_shared<const HeckeAlgebra>(HeckeAlgebra::graded_A(2));
  SymbolicPS sym(H);
  auto pts = parse_line("0..3/2/6", default_direction(*H));
  auto rows = unitarity_scan(sym, pts);
  o.expect(rows.size() == 7, "A1 scan has " + std::to_string(rows.size()) + " rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Rational t = make_rational(static_cast<long>(i), 4);
    QMatrix F(2, 2);
    F(0, 0) = F(1, 1) = 1;
    F(0, 1) = F(1, 0) = t;
    Inertia in = signature(F);
    bool oracle = in.neg == 0;
    o.expect(rows[i].unitary == oracle, "A1 scan at t = " + to_string(t) + ": unitary " + (rows[i].unitary ? "true" : "false"));
    PSModule ps = sym.at(pts[i]);
    InvariantForm f = hermitian_form(ps);
    o.expect(f.status == FormStatus::Hermitian, "A1 scan at t = " + to_string(t) + ": no form");
    if (f.status == FormStatus::Hermitian) o.absorb(check_form_invariance(ps, f.matrix, 10), "A1 t = " + to_string(t));
  }
  return o;
}

Outcome functor_comparison() {
  Outcome o;
  std::uint64_t seed = 40;
  for (const char* s : {"GL(2,R)", "GL(3,R)", "U(2,1)", "Sp(2,R)", "O(2,1)"}) {
    auto g = parse_group(s);
    OdaOptions opt;
    opt.degree = 3;
    opt.nus = sample_nus(g.real_rank(), 3, seed++);
    for (const auto& rep : oda_suite(g, opt)) o.absorb(rep.result, std::string(s) + " " + rep.check);
  }
  return o;
}

Outcome hermitian() {
  Outcome o;
  // nu = 0, a complementary-series point and one far out
  std::vector<std::vector<Rational>> nus = {{Rational(0)}, {make_rational(1, 3)}, {make_rational(7, 2)}};
  for (const char* s : {"U(2,1)", "Sp(2,R)", "O(2,1)"}) {
    auto tr = hermitian_transfer(parse_group(s), 2, nus);
    o.absorb(tr.result, s);
    o.expect(tr.points.size() == nus.size(), std::string(s) + ": missing points");
    for (const auto& p : tr.points) o.expect(p.scale > 0, std::string(s) + ": nonpositive scale at " + to_string(p.nu[0]));
    if (tr.points.size() == 3) {
      for (int i : {0, 1}) {
        const auto& p = tr.points[i];
        o.expect(p.hecke.neg == 0 && p.induced.neg == 0,
                 std::string(s) + ": positivity does not transfer at nu = " + to_string(p.nu[0]));
      }
      o.expect(tr.points[2].induced.neg == tr.points[2].hecke.neg, std::string(s) + ": inertia differs at nu = 7/2");
    }
  }
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome determinism() {
  Outcome o;
  const std::string cli = GAHA_CLI;
  std::string dir = "acceptance_det";
  std::filesystem::create_directories(dir);
  struct Run {
    std::string args, file;
  };
  std::vector<Run> runs = {{"verify \"U(2,1)\" --suite all", "verify_u21.json"},
                           {"verify \"GL(2,R)\" --suite all", "verify_gl2.json"},
                           {"scan \"Sp(4,R)\" --line 0..49/49 --dir 1/7,1/11 --format json", "scan.json"},
                           {"scan \"Sp(4,R)\" --line 0..49/49 --dir 1/7,1/11 --format csv", "scan.csv"}};
  for (const auto& r : runs) {
    std::string a = dir + "/a_" + r.file, b = dir + "/b_" + r.file;
    int ea = std::system((cli + " " + r.args + " --out " + a + " 2>/dev/null").c_str());
    int eb = std::system((cli + " " + r.args + " --out " + b + " 2>/dev/null").c_str());
    o.expect(ea == 0 && eb == 0, r.args + ": nonzero exit");
    std::string da = slurp(a), db = slurp(b);
    o.expect(!da.empty() && da == db, r.args + ": outputs differ");
  }
  std::string scan = slurp(dir + "/a_scan.csv");
  o.expect(std::count(scan.begin(), scan.end(), '\n') == 51, "scan should have 50 rows");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"restricted root table", table1},
      {"character parameter table", table2},
      {"dimension law", dimension_law},
      {"operator identities", operator_identities},
      {"Hecke algebra integrity", hecke_integrity},
      {"principal series", principal_series},
      {"forms and unitarity", forms_and_unitarity},
      {"functor comparison", functor_comparison},
      {"Hermitian transfer", hermitian},
      {"determinism", determinism},
  };
  std::vector<int> pick;
  for (int i = 1; i < argc; ++i) pick.push_back(std::atoi(argv[i]));
  if (pick.empty())
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) pick.push_back(i);
  int failed = 0;
  for (int i : pick) {
    if (i < 1 || i > static_cast<int>(criteria.size())) {
      std::cerr << "no criterion " << i << "\n";
      return 2;
    }
    Outcome o;
    try {
      o = criteria[i - 1].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << i << " " << criteria[i - 1].first << " (" << o.checks << " checks)";
    if (!o.ok) {
      std::cout << ": " << o.failures.size() << " failing";
      for (const auto& f : o.failures) std::cout << "\n    " << f;
    }
    std::cout << std::endl;
    failed += !o.ok;
  }
  return failed;
}
