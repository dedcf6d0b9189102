#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gaha/poly.hpp"
#include "gaha/roots.hpp"

namespace gaha {

// sum_w p_w(eps) * w, polynomial factor on the left. Group elements are
// indices into the owning algebra's WeylGroup.
struct HeckeElement {
  std::uint64_t algebra = 0;
  int nvars = 0;
  std::map<std::size_t, Poly> terms;

  bool is_zero() const { return terms.empty(); }
  void add(std::size_t w, const Poly& p);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& operator*=(const Rational& c);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(HeckeElement a, const Rational& c) { return a *= c; }
  friend HeckeElement operator*(const Rational& c, HeckeElement a) { return a *= c; }
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.terms == b.terms; }
};

// sum_w w * r_w(eps), polynomial factor on the right
using RightForm = std::map<std::size_t, Poly>;

struct RelationReport {
  bool ok = true;
  int checks = 0;
  std::string failure;  // first failing identity with both sides
};

class HeckeAlgebra {
 public:
  // c must be W-invariant on the reduced roots (ParameterFunction checks)
  HeckeAlgebra(RootDatum rd, ParameterFunction c);

  static HeckeAlgebra graded_A(int n, const Rational& c = 1);  // H_n on n coordinates
  static HeckeAlgebra tilde(int k, const Rational& c);         // H~_k(c), type C_k
  static HeckeAlgebra for_group(const GroupDescriptor& g);     // normalized H(G_R)

  const RootDatum& roots() const { return rd_; }
  const WeylGroup& weyl() const { return W_; }
  int nvars() const { return rd_.ncoords; }
  std::uint64_t id() const { return id_; }
  std::string name() const { return name_; }

  std::size_t num_positive() const { return pos_.size(); }
  const Root& positive_root(std::size_t b) const { return pos_[b].root; }
  Rational c(std::size_t b) const { return pos_[b].c; }
  std::size_t reflection_index(std::size_t b) const { return pos_[b].w; }
  std::size_t num_simple() const { return simple_.size(); }
  std::size_t simple_root_index(std::size_t g) const { return simple_[g]; }  // into positive roots
  std::size_t identity() const { return 0; }
  std::size_t wmul(std::size_t a, std::size_t b) const;
  std::size_t winv(std::size_t a) const { return inverse_[a]; }
  std::size_t generator_element(std::size_t g) const { return gen_elem_[g]; }

  // generator names: s1.. for e_i - e_{i+1}, sbar (sd in type D) for the last simple root otherwise
  std::string generator_name(std::size_t g) const;
  std::string element_name(std::size_t w) const;

  HeckeElement zero() const;
  HeckeElement one() const;
  HeckeElement group(std::size_t w) const;
  HeckeElement poly(const Poly& p) const;
  HeckeElement eps(int i) const;
  HeckeElement linear(const std::vector<Rational>& f) const;

  Poly act(std::size_t w, const Poly& p) const;
  // (p - s_b p) / b-coroot; exact
  Poly divided_difference(std::size_t b, const Poly& p) const;
  // f(beta) for a linear form f given by coefficients
  static Rational pair(const std::vector<Rational>& f, const Root& beta);

  HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement left_mul_simple(std::size_t g, const HeckeElement& h) const;
  RightForm to_right_form(const HeckeElement& h) const;

  // f~ = f - 1/2 sum c(b) f(b) s_b
  HeckeElement drinfeld_lift(const std::vector<Rational>& f) const;
  HeckeElement drinfeld_lift(const Poly& f) const;  // rejects non-linear f
  // eps_i' = eps_i - sum c(b) eps_i(b) s_b, the generators for the opposite chamber
  HeckeElement opposite_generator(int i) const;

  HeckeElement star(const HeckeElement& h) const;

  HeckeElement random_element(std::mt19937_64& rng, int max_degree, int nterms) const;

  RelationReport verify_relations(int trials, std::uint64_t seed = 1) const;

  std::string to_string(const HeckeElement& h) const;
  // sums of products of rationals, e1.., generator names and parentheses;
  // parse(to_string(h)) == h. Throws std::invalid_argument.
  HeckeElement parse(std::string_view s) const;

 private:
  void check(const HeckeElement& h) const;
  void moving_right(const Poly& p, const std::vector<int>& word, std::size_t pos, RightForm& out, std::size_t prefix) const;

  struct PosRoot {
    Root root;
    Rational c;
    std::size_t w;           // index of s_root in W
    std::vector<Rational> coroot;  // as linear form in eps
  };

  RootDatum rd_;
  ParameterFunction c_;
  WeylGroup W_;
  std::vector<PosRoot> pos_;
  std::vector<std::size_t> simple_;
  std::vector<std::size_t> gen_elem_;     // generator -> element index
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> table_;        // multiplication table when W is small
  std::vector<HeckeElement> star_eps_;
  std::uint64_t id_;
  std::string name_;
};

}  // namespace gaha
