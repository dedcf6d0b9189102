#include <doctest.h>

#include <map>

#include "gaha/oda.hpp"

using namespace gaha;

namespace {

std::shared_ptr<const LieModel> model(const std::string& s) {
  return std::make_shared<const LieModel>(LieModel::build(parse_group(s)));
}

QMatrix E(int n, int i, int j) {
  QMatrix m(n, n);
  m(i - 1, j - 1) = 1;
  return m;
}

std::vector<Rational> nu_of(std::initializer_list<Rational> xs) { return std::vector<Rational>(xs); }

}  // namespace

TEST_CASE("structure constants for every group") {
  for (const char* s : {"GL(2,R)", "GL(3,R)", "U(2,1)", "U(2,2)", "Sp(4,R)", "O(3,2)", "O(2,2)"}) {
    CAPTURE(std::string(s));
    Enveloping U(model(s));
    CHECK(U.num_n() + U.num_a() + U.num_k() == static_cast<int>(U.model().basis().size()));
    auto r = U.check_structure();
    CHECK_MESSAGE(r.ok, r.failure);
  }
}

TEST_CASE("PBW rewriting on gl(2)") {
  Enveloping U(model("GL(2,R)"));
  // letters: n = {2 E12}, a = {E11, E22}, k = {E12 - E21}
  REQUIRE(U.num_n() == 1);
  REQUIRE(U.num_a() == 2);
  CHECK(U.element(E(2, 1, 2)) == UElem{{Word{0}, Rational(1, 2)}});
  CHECK(U.element(E(2, 1, 1)) == UElem{{Word{1}, 1}});
  // ordered words are fixed
  UElem w{{Word{0, 1, 2}, 1}};
  CHECK(U.normal(w) == w);
  // E11 E12 = E12 E11 + E12
  CHECK(U.normal(UElem{{Word{1, 0}, 1}}) == UElem{{Word{0, 1}, 1}, {Word{0}, 1}});
  // E22 E12 = E12 E22 - E12
  CHECK(U.normal(UElem{{Word{2, 0}, 1}}) == UElem{{Word{0, 2}, 1}, {Word{0}, -1}});
  // [K, E12] = E11 - E22 when K = E12 - E21
  UElem ke = U.normal(UElem{{Word{3, 0}, 1}});
  CHECK(ke == UElem{{Word{0, 3}, 1}, {Word{1}, 2}, {Word{2}, -2}});
  // in the coset the k-tail dies
  CHECK(U.coset(UElem{{Word{3, 0}, 1}}) == UElem{{Word{1}, 2}, {Word{2}, -2}});
  CHECK(U.coset(UElem{{Word{3}, 1}}).empty());
}

TEST_CASE("sl(2) inside Sp(2,R): F E = E F - H") {
  // Chevalley triple from the n- and a-letters: E in n, H = 2 eps, F = theta-image of E
  auto L = model("Sp(2,R)");
  Enveloping U(L);
  REQUIRE(U.num_n() == 1);
  QMatrix Em = U.letter(0), Hm = U.letter(1) * Rational(2);
  QMatrix Fm = L->theta(Em) * Rational(-1);
  // normalize so that [E, F] = H
  QMatrix br = Em * Fm - Fm * Em;
  Rational s;
  for (int i = 0; i < Hm.rows() && is_zero(s); ++i)
    for (int j = 0; j < Hm.cols() && is_zero(s); ++j)
      if (!is_zero(Hm(i, j))) s = br(i, j) / Hm(i, j);
  REQUIRE(!is_zero(s));
  Fm = Fm * (1 / s);
  REQUIRE(Em * Fm - Fm * Em == Hm);
  UElem fe = concat(U.element(Fm), U.element(Em));
  UElem ef = concat(U.element(Em), U.element(Fm));
  add_to(ef, U.element(Hm), Rational(-1));
  CHECK(U.normal(fe) == U.normal(ef));
}

TEST_CASE("gamma0 keeps the pure a-part") {
  Enveloping U(model("GL(2,R)"));
  Poly p = U.gamma0(UElem{{Word{1, 1, 2}, 3}, {Word{0, 1}, 5}, {Word{}, 2}});
  Poly want(2);
  want.add_term({2, 1}, 3);
  want.add_term({0, 0}, 2);
  CHECK(p == want);
  CHECK(U.gamma0(UElem{{Word{0, 2}, 1}}).is_zero());
}

TEST_CASE("dagger is the antiautomorphism X -> -X on real letters") {
  Enveloping U(model("GL(2,R)"));
  CHECK(U.dagger(UElem{{Word{0}, 1}}) == UElem{{Word{0}, -1}});
  // (E12 E11)^dagger = E11 E12 as a word
  CHECK(U.dagger(UElem{{Word{0, 1}, 1}}) == UElem{{Word{1, 0}, 1}});
}

TEST_CASE("equivariant homs for GL(2,R) against a weight count") {
  // K = O(2), mu_0 = sgn det. The reflection diag(1,-1) has trace 0 on V (x) V,
  // so the dimension is half the number of SO(2)-weight-zero vectors in
  // S^{<=d}(p) (x) V (x) V; p has weights 0, 2, -2 and V has weights 1, -1.
  auto weight_zero = [](int d) {
    std::map<int, long> sp{{0, 1}}, total{{0, 1}};
    for (int j = 1; j <= d; ++j) {
      // S^j(p) weights: choose counts of +2 and -2, rest weight 0
      std::map<int, long> sj;
      for (int a = 0; a <= j; ++a)
        for (int b = 0; a + b <= j; ++b) ++sj[2 * a - 2 * b];
      for (auto [w, m] : sj) total[w] += m;
    }
    std::map<int, long> vv{{2, 1}, {0, 2}, {-2, 1}};
    long z = 0;
    for (auto [w, m] : total)
      if (vv.count(-w)) z += m * vv[-w];
    return z;
  };
  auto L = model("GL(2,R)");
  Enveloping U(L);
  TensorSpace ts(L, 2);
  for (int d = 0; d <= 3; ++d) {
    CAPTURE(d);
    CHECK(equivariant_homs(U, ts, d).homs.size() * 2 == static_cast<std::size_t>(weight_zero(d)));
  }
  CHECK(equivariant_homs(U, ts, 0).homs.size() == 1);
}

TEST_CASE("Gamma on GL(2,R)") {
  auto L = model("GL(2,R)");
  auto U = std::make_shared<const Enveloping>(L);
  auto H = std::make_shared<const HeckeAlgebra>(HeckeAlgebra::for_group(parse_group("GL(2,R)")));
  TensorSpace ts(L, 2);
  OdaMap oda(U, H);
  Vec uid = closed_form_basis(ts).at(0);
  // degree one homs give values of degree at most one
  auto hs1 = equivariant_homs(*U, ts, 1);
  int top = 0;
  for (const auto& T : hs1.homs) top = std::max(top, oda.gamma_map(T, uid).degree());
  CHECK(top == 1);
  // constants go to constants
  auto hs0 = equivariant_homs(*U, ts, 0);
  REQUIRE(hs0.homs.size() == 1);
  CHECK(oda.gamma_map(hs0.homs[0], uid).degree() == 0);
  // injective up to degree 4
  for (int d = 1; d <= 4; ++d) {
    auto hs = equivariant_homs(*U, ts, d);
    std::map<Exponent, std::size_t> idx;
    std::vector<std::map<Exponent, Rational>> vals;
    for (const auto& T : hs.homs) {
      auto p = oda.gamma_map(T, uid);
      vals.push_back(p.terms());
      for (const auto& [e, c] : p.terms()) idx.emplace(e, idx.size());
    }
    QMatrix M(idx.size(), hs.homs.size());
    for (std::size_t j = 0; j < vals.size(); ++j)
      for (const auto& [e, c] : vals[j]) M(idx[e], j) = c;
    CHECK(rank(M) == hs.homs.size());
  }
}

TEST_CASE("oda suite on the rank-one and GL configurations") {
  struct Case {
    const char* g;
    std::vector<std::vector<Rational>> nus;
  };
  std::vector<Case> cases = {
      {"GL(2,R)", {nu_of({Rational(1, 2), Rational(-1, 2)}), nu_of({Rational(1, 3), Rational(2, 5)})}},
      {"U(2,1)", {nu_of({Rational(1, 3)})}},
      {"Sp(2,R)", {nu_of({Rational(3, 4)})}},
      {"O(2,1)", {nu_of({Rational(2, 7)})}},
      {"U(3,1)", {nu_of({Rational(1, 5)})}},
      {"O(3,1)", {nu_of({Rational(5, 3)})}},
  };
  for (const auto& c : cases) {
    OdaOptions opt;
    opt.degree = 3;
    opt.nus = c.nus;
    for (const auto& rep : oda_suite(parse_group(c.g), opt)) {
      CAPTURE(std::string(c.g));
      CAPTURE(rep.check);
      CHECK_MESSAGE(rep.result.ok, rep.result.failure);
      CHECK(rep.result.checks > 0);
    }
  }
}

TEST_CASE("oda suite rejects complex k_alpha actions") {
  OdaOptions opt;
  opt.degree = 1;
  CHECK_THROWS_AS(oda_suite(parse_group("U(2,2)"), opt), std::invalid_argument);
}

TEST_CASE("spherical functional") {
  auto L = model("GL(2,R)");
  Enveloping U(L);
  SphericalFunctional phi(U, 2);
  auto nu = nu_of({Rational(1, 3), Rational(-1, 7)});
  CHECK(phi(UElem{{Word{}, 1}}, nu) == 1);
  // E11 = (E11 + E22)/2 + (E11 - E22)/2; only the central half has a K-fixed part
  CHECK(phi(UElem{{Word{1}, 1}}, nu) == (nu[0] + nu[1]) / 2);
  // k on the left pairs to zero
  for (const auto& w : truncated_words(U, 1)) {
    Word kw{3};
    kw.insert(kw.end(), w.begin(), w.end());
    CHECK(phi(UElem{{kw, 1}}, nu) == 0);
  }
  CHECK_THROWS_AS(phi(UElem{{Word{0, 0, 0}, 1}}, nu), std::out_of_range);
}

TEST_CASE("hermitian transfer at rank one") {
  for (const char* s : {"Sp(2,R)", "O(2,1)", "U(2,1)"}) {
    CAPTURE(std::string(s));
    auto g = parse_group(s);
    auto tr = hermitian_transfer(g, 2, {nu_of({0}), nu_of({Rational(1, 3)}), nu_of({Rational(7, 2)})});
    CHECK_MESSAGE(tr.result.ok, tr.result.failure);
    REQUIRE(tr.points.size() == 3);
    // at nu = 0 both forms are positive
    CHECK(tr.points[0].hecke.neg == 0);
    CHECK(tr.points[0].induced.neg == 0);
    CHECK(tr.points[0].induced.pos == 2);
    // far out the Hecke form is indefinite and so is the induced one
    CHECK(tr.points[2].hecke.neg == 1);
    CHECK(tr.points[2].induced.neg == 1);
  }
}
