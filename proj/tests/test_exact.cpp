#include <doctest.h>

#include <random>

#include "gaha/linalg.hpp"
#include "gaha/poly.hpp"
#include "gaha/sparse.hpp"

using namespace gaha;

namespace {

QMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("7/14") == Rational(1, 2));
  CHECK(parse_rational(" -3 ") == Rational(-3));
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("gaussian rationals") {
  GaussRational i = GaussRational::i();
  CHECK(i * i == GaussRational(-1));
  GaussRational z(Rational(1, 2), Rational(-3));
  CHECK(z.conj().conj() == z);
  CHECK(z / z == GaussRational(1));
  CHECK((z * z.conj()).is_real());
}

TEST_CASE("nullspace") {
  CHECK(nullspace(QMatrix::identity(3)).empty());
  CHECK(nullspace(QMatrix(2, 2)).size() == 2);
  auto ns = nullspace(QMatrix::from_rows({{1, 1}, {2, 2}}));
  REQUIRE(ns.size() == 1);
  // proportional to (1,-1)
  CHECK(ns[0][0] == -ns[0][1]);
  CHECK(ns[0][0] != 0);
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + t % 5, c = 1 + (t * 3) % 6;
    QMatrix m = random_matrix(rng, r, c, -1, 1);
    auto ns = nullspace(m);
    CHECK(ns.size() + rank(m) == c);
    for (const auto& v : ns)
      for (const auto& x : m.apply(v)) CHECK(x == 0);
  }
}

TEST_CASE("sparse system agrees with dense nullspace") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 2 + t % 6, c = 3 + t % 7;
    QMatrix m = random_matrix(rng, r, c, -2, 2);
    SparseSystem sys(c);
    for (std::size_t i = 0; i < r; ++i) {
      SparseRow row;
      for (std::size_t j = 0; j < c; ++j)
        if (m(i, j) != 0) row[j] = m(i, j);
      sys.add(row);
    }
    auto ns = sys.nullspace();
    CHECK(ns.size() == nullspace(m).size());
    for (const auto& v : ns)
      for (const auto& x : m.apply(v)) CHECK(x == 0);
  }
}

TEST_CASE("signature") {
  CHECK(signature(QMatrix::from_rows({{1, 0}, {0, -1}})) == Inertia{1, 1, 0});
  CHECK(signature(QMatrix::from_rows({{0, 1}, {1, 0}})) == Inertia{1, 1, 0});
  CHECK(signature(QMatrix(2, 2)) == Inertia{0, 0, 2});
  CHECK_THROWS(signature(QMatrix::from_rows({{0, 1}, {0, 0}})));
  // a zero pivot followed by a nonzero one: [[0,1,0],[1,0,0],[0,0,3]]
  CHECK(signature(QMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 3}})) == Inertia{2, 1, 0});
}

TEST_CASE("signature is a congruence invariant") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + t % 4;
    QMatrix a = random_matrix(rng, n, n, -2, 2);
    QMatrix s = a + a.transpose();
    QMatrix p = random_matrix(rng, n, n, -2, 2);
    if (determinant(p) == 0) continue;
    CHECK(signature(s) == signature(p.transpose() * s * p));
    Inertia in = signature(s);
    CHECK(in.zero == n - rank(s));
  }
}

TEST_CASE("polynomial arithmetic") {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Poly p = x * x - y * y;
  CHECK(p.divide_exact(x - y) == x + y);
  CHECK_THROWS(p.divide_exact(x + x * y));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 20; ++t) {
    Poly a = x * Rational(d(rng)) + y * y * Rational(d(rng)) + Poly(2, Rational(d(rng)));
    Poly b = x * y * Rational(d(rng)) + Poly(2, make_rational(d(rng), 3));
    std::vector<Rational> pt{make_rational(d(rng), 2), make_rational(d(rng), 5)};
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
  }
}
