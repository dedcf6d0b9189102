#include <doctest.h>

#include "gaha/lie_model.hpp"

using namespace gaha;

namespace {

const char* kGroups[] = {"GL(2,R)", "GL(3,R)", "GL(4,R)", "U(1,1)",  "U(2,1)",  "U(2,2)",
                         "U(3,1)",  "U(3,2)",  "U(4,1)",  "Sp(2,R)", "Sp(4,R)", "Sp(6,R)",
                         "O(2,1)",  "O(3,1)",  "O(2,2)",  "O(3,2)",  "O(4,1)"};

QMatrix E(int n, int i, int j) {
  QMatrix m(n, n);
  m(i - 1, j - 1) = 1;
  return m;
}

// Projection onto the invariants of a family of operators, killing the sum
// of their images. Independent of the library's closed formula.
QMatrix isotypic_trivial(const std::vector<QMatrix>& ops, std::size_t n) {
  QMatrix stack(ops.size() * n, n);
  for (std::size_t o = 0; o < ops.size(); ++o)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stack(o * n + i, j) = ops[o](i, j);
  auto inv = nullspace(stack);
  std::vector<std::vector<Rational>> cols = inv;
  for (const auto& op : ops)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = op(i, j);
      cols.push_back(c);
    }
  // basis adapted to invariants + images
  QMatrix all = from_columns(cols, n);
  auto e = rref(all);
  std::vector<std::vector<Rational>> chosen;
  for (auto p : e.pivots) chosen.push_back(cols[p]);
  REQUIRE(chosen.size() == n);
  QMatrix B = from_columns(chosen, n);
  QMatrix D(n, n);
  for (std::size_t i = 0; i < inv.size(); ++i) D(i, i) = 1;  // invariants come first
  return B * D * *inverse(B);
}

}  // namespace

TEST_CASE("model structure for every group in range") {
  for (const char* s : kGroups) {
    CAPTURE(std::string(s));
    auto L = LieModel::build(parse_group(s));
    auto r = check_model(L);
    CHECK_MESSAGE(r.ok, r.failure);
    CHECK(r.checks > 30);
  }
}

TEST_CASE("casimir scalar on V") {
  // tr on gl(n); half trace on so and sp
  CHECK(LieModel::build(parse_group("GL(3,R)")).casimir() == QMatrix::identity(3) * Rational(3));
  CHECK(LieModel::build(parse_group("U(2,1)")).casimir() == QMatrix::identity(3) * Rational(3));
  CHECK(LieModel::build(parse_group("O(3,2)")).casimir() == QMatrix::identity(5) * Rational(4));
  CHECK(LieModel::build(parse_group("Sp(4,R)")).casimir() == QMatrix::identity(4) * Rational(5));
}

TEST_CASE("GL(2,R) root data") {
  auto L = LieModel::build(parse_group("GL(2,R)"));
  REQUIRE(L.reflections().size() == 1);
  GMatrix Z = to_gauss(E(2, 1, 2) - E(2, 2, 1));
  CHECK(L.reflections()[0].Z == Z);
  CHECK(L.reflections()[0].k == Z);  // rotation by pi/2
  CHECK(L.rho() == std::vector<Rational>{Rational(1, 2), Rational(-1, 2)});
  CHECK(L.omega_vv() == L.flip_vv());
}

TEST_CASE("rho for GL(3,R)") {
  auto L = LieModel::build(parse_group("GL(3,R)"));
  CHECK(L.rho() == std::vector<Rational>{1, 0, -1});
}

TEST_CASE("U(p,1): k_eps is diagonal") {
  for (int p : {2, 3, 4}) {
    CAPTURE(p);
    auto L = LieModel::build(parse_group("U(" + std::to_string(p) + ",1)"));
    REQUIRE(L.reflections().size() == 1);
    QMatrix k = QMatrix::identity(p + 1);
    k(0, 0) = -1;
    k(p - 1, p - 1) = -1;
    CHECK(L.reflections()[0].k == to_gauss(k));
    // Z = 2(E_p1 - E_1p): same k, phase differs from the quoted Z
    CHECK(L.reflections()[0].Z == to_gauss((E(p + 1, p, 1) - E(p + 1, 1, p)) * Rational(2)));
  }
}

TEST_CASE("exp_pi_half") {
  CHECK(exp_pi_half(GMatrix(3, 3)) == GMatrix::identity(3));
  GMatrix rot = to_gauss(E(2, 1, 2) - E(2, 2, 1));
  CHECK(exp_pi_half(rot) == rot);
  CHECK(exp_pi_half(rot * GaussRational(2)) == GMatrix::identity(2) * GaussRational(-1));
  CHECK(exp_pi_half(rot * GaussRational(4)) == GMatrix::identity(2));
  // diag(i, -i) -> diag(i, -i)
  GMatrix d(2, 2);
  d(0, 0) = GaussRational::i();
  d(1, 1) = -GaussRational::i();
  CHECK(exp_pi_half(d) == d);
  CHECK_THROWS_AS(exp_pi_half(to_gauss(E(2, 1, 2) + E(2, 2, 1))), std::domain_error);  // real spectrum
  CHECK_THROWS_AS(exp_pi_half(to_gauss(E(2, 1, 2))), std::domain_error);                // nilpotent
}

TEST_CASE("sqrt_exact") {
  CHECK(sqrt_exact(Rational(9, 4)) == Rational(3, 2));
  CHECK_THROWS(sqrt_exact(Rational(2)));
  CHECK_THROWS(sqrt_exact(Rational(-1)));
}

TEST_CASE("Omega on V(x)V against an isotypic oracle") {
  for (const char* s : {"Sp(2,R)", "Sp(4,R)", "O(2,1)", "O(2,2)", "O(3,2)"}) {
    CAPTURE(std::string(s));
    auto L = LieModel::build(parse_group(s));
    std::size_t N = L.dim_v();
    QMatrix I = QMatrix::identity(N);
    std::vector<QMatrix> delta, delta_k;
    for (const auto& b : L.basis()) {
      QMatrix d = kron(b.m, I) + kron(I, b.m);
      delta.push_back(d);
      if (b.in_k) delta_k.push_back(d);
    }
    // K may be disconnected: add the finite generators and real k_alpha
    std::vector<QMatrix> comps = L.m_finite();
    for (const auto& r : L.reflections()) {
      bool real = true;
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) real = real && r.k(i, j).is_real();
      if (real) comps.push_back(real_part_checked(r.k));
    }
    for (const auto& g : comps) delta_k.push_back(kron(g, g) - QMatrix::identity(N * N));
    QMatrix prG = isotypic_trivial(delta, N * N);
    QMatrix prK = isotypic_trivial(delta_k, N * N);
    CHECK(prG == L.trivial_projector_vv());
    CHECK(prK == L.trivial_k_projector_vv());
    QMatrix R = L.flip_vv();
    CHECK(L.omega_vv() == R - prG * Rational(static_cast<long>(N)));
    QMatrix mx = kron(I, L.xi());
    QMatrix half = (R + mx * R * mx) * Rational(1, 2);
    // with the g-isotypic projector the identity is off everywhere
    CHECK_FALSE(L.omega_k_vv() == half - prG * make_rational(static_cast<long>(N), 2));
    // with the K-isotypic one it holds iff xi is traceless
    bool balanced = L.xi().trace() == Rational(0);
    CHECK((L.omega_k_vv() == half - prK * make_rational(static_cast<long>(N), 2)) == balanced);
    CHECK(omega_k_lemma_check(L).ok == balanced);
  }
}

TEST_CASE("Omega^k for O(2,1) by hand") {
  // so(2) + so(1): Omega^k = 1/2(R + m R m) - 2 pr_p - 1 pr_q
  auto L = LieModel::build(parse_group("O(2,1)"));
  QMatrix R = L.flip_vv();
  QMatrix mx = kron(QMatrix::identity(3), L.xi());
  QMatrix tp(9, 1), tq(9, 1);
  tp(0, 0) = 1;
  tp(4, 0) = 1;
  tq(8, 0) = 1;
  QMatrix rhs = (R + mx * R * mx) * Rational(1, 2) - tp * tp.transpose() - tq * tq.transpose();
  CHECK(L.omega_k_vv() == rhs);
}

TEST_CASE("Omega^k for U(1,1)") {
  auto L = LieModel::build(parse_group("U(1,1)"));
  QMatrix I = QMatrix::identity(2);
  QMatrix mx = kron(I, L.xi());
  QMatrix R = L.flip_vv();
  CHECK(L.omega_k_vv() == (R + mx * R * mx) * Rational(1, 2));
  CHECK(L.trivial_projector_vv().is_zero_matrix());
  CHECK_THROWS(LieModel::build(parse_group("GL(2,R)")).omega_k_vv());
}

TEST_CASE("mu0 on the reflection representatives") {
  auto L = LieModel::build(parse_group("U(1,1)"));
  // k = diag(-i, i): the U(1) part is i
  CHECK(L.mu0(L.reflections()[0].k) == GaussRational::i());
  auto O = LieModel::build(parse_group("O(2,2)"));
  CHECK(O.mu0(O.reflections()[1].k) == GaussRational(-1));  // outer flip in O(q)
}
