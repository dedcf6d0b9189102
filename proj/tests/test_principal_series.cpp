#include <doctest.h>

#include "gaha/principal_series.hpp"

using namespace gaha;

namespace {

std::shared_ptr<const HeckeAlgebra> share(HeckeAlgebra H) { return std::make_shared<const HeckeAlgebra>(std::move(H)); }

// 2x2 oracle for H(A1, c=1) at nu = (t/2, -t/2), basis (1, s):
// pi(eps1) = [[n1, 1], [0, n2]], pi(eps1*) = -pi(eps1) + pi(s).
// s-invariance gives F = [[a, b], [b, a]] and the (0,0) entry of the
// eps1 equation gives b = 2 n1 a = t a. So F ~ [[1, t], [t, 1]].
Inertia a1_oracle(const Rational& t) {
  Rational det = 1 - t * t;
  if (det > 0) return {2, 0, 0};
  if (det == 0) return {1, 0, 1};
  return {1, 1, 0};
}

}  // namespace

TEST_CASE("principal series of H(A1)") {
  SymbolicPS sym(share(HeckeAlgebra::graded_A(2)));
  PSModule ps = sym.at({Rational(2, 3), Rational(-1, 5)});
  // eps1 (1 x 1) = nu1 (1 x 1)
  CHECK(ps.eps(0)(0, 0) == Rational(2, 3));
  CHECK(ps.eps(0)(1, 0) == 0);
  // eps1 (s x 1) = nu2 (s x 1) + (1 x 1)
  CHECK(ps.eps(0)(1, 1) == Rational(-1, 5));
  CHECK(ps.eps(0)(0, 1) == 1);
  CHECK(check_module_relations(ps).ok);
}

TEST_CASE("dimension is |W|") {
  SymbolicPS sym(share(HeckeAlgebra::tilde(2, 1)));
  CHECK(sym.at({Rational(1), Rational(1, 2)}).dim() == 8);
  CHECK_THROWS(SymbolicPS(share(HeckeAlgebra::graded_A(6))));
}

TEST_CASE("module relations and cyclicity at random nu") {
  for (auto H : {HeckeAlgebra::graded_A(3), HeckeAlgebra::tilde(2, Rational(1, 2)), HeckeAlgebra::tilde(2, 0)}) {
    SymbolicPS sym(share(H));
    PSModule ps = sym.at(std::vector<Rational>{Rational(3, 7), Rational(-2, 11), Rational(5, 13)}.size() == std::size_t(H.nvars())
                             ? std::vector<Rational>{Rational(3, 7), Rational(-2, 11), Rational(5, 13)}
                             : std::vector<Rational>{Rational(3, 7), Rational(-2, 11)});
    CHECK(check_module_relations(ps).ok);
    CHECK(krylov_dimension(ps) == ps.dim());
    CHECK(check_regular_character(ps).ok);
  }
}

TEST_CASE("forms at nu = 0") {
  for (auto H : {HeckeAlgebra::graded_A(2), HeckeAlgebra::graded_A(3), HeckeAlgebra::tilde(2, 1)}) {
    SymbolicPS sym(share(H));
    PSModule ps = sym.at(std::vector<Rational>(H.nvars(), Rational(0)));
    InvariantForm f = hermitian_form(ps);
    REQUIRE(f.status == FormStatus::Hermitian);
    CHECK(signature(f.matrix) == Inertia{ps.dim(), 0, 0});
    CHECK(check_form_invariance(ps, f.matrix, 5).ok);
  }
}

TEST_CASE("A1 forms against the 2x2 oracle") {
  SymbolicPS sym(share(HeckeAlgebra::graded_A(2)));
  for (int num = 0; num <= 6; ++num) {
    Rational t = make_rational(num, 4);
    PSModule ps = sym.at({t / 2, -t / 2});
    InvariantForm f = hermitian_form(ps);
    REQUIRE(f.status == FormStatus::Hermitian);
    CHECK(signature(f.matrix) == a1_oracle(t));
    CHECK(check_form_invariance(ps, f.matrix).ok);
  }
}

TEST_CASE("non-hermitian point") {
  SymbolicPS sym(share(HeckeAlgebra::graded_A(3)));
  // no w with w nu = -nu
  CHECK(hermitian_form(sym.at({2, 0, -1})).status == FormStatus::NonHermitian);
}

TEST_CASE("spherical quotient") {
  SymbolicPS sym(share(HeckeAlgebra::graded_A(2)));
  auto quotient_at = [&](Rational t) {
    PSModule ps = sym.at({t / 2, -t / 2});
    return spherical_quotient(ps, hermitian_form(ps).matrix);
  };
  CHECK(quotient_at(0).dim == 2);
  CHECK(quotient_at(Rational(1, 2)).dim == 2);
  CHECK(quotient_at(Rational(1, 2)).inertia == Inertia{2, 0, 0});
  // reducibility at <nu, coroot> = c = 1: only the trivial module survives
  CHECK(quotient_at(1).dim == 1);
  CHECK(quotient_at(1).radical_dim == 1);
}

TEST_CASE("A1 scan") {
  SymbolicPS sym(share(HeckeAlgebra::graded_A(2)));
  auto dir = default_direction(sym.algebra());
  CHECK(dir == std::vector<Rational>{Rational(1, 2), Rational(-1, 2)});
  auto rows = unitarity_scan(sym, parse_line("0..3/2/6", dir));
  REQUIRE(rows.size() == 7);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Rational t = make_rational(static_cast<long>(i), 4);
    CHECK(rows[i].unitary == (t <= 1));
  }
  CHECK(scan_csv(rows).rfind("nu,hermitian,radical_dim,pos,neg,zero,unitary\n0;0,true,0,2,0,0,true\n", 0) == 0);
}
