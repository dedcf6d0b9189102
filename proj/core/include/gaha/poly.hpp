#pragma once

#include <map>
#include <string>
#include <vector>

#include "gaha/rational.hpp"

namespace gaha {

using Exponent = std::vector<int>;

// Sparse commutative polynomial in a fixed number of variables.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}
  Poly(int nvars, const Rational& c);

  static Poly variable(int nvars, int i, const Rational& coeff = 1);
  static Poly monomial(const Exponent& e, const Rational& coeff = 1);
  // sum_i coeffs[i] x_i
  static Poly linear(const std::vector<Rational>& coeffs);

  int nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coeff(const Exponent& e) const;
  int degree() const;  // -1 for zero

  void add_term(const Exponent& e, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Rational eval(const std::vector<Rational>& x) const;

  // x_i -> sign[i] * x_{perm[i]}
  Poly signed_permute(const std::vector<int>& perm, const std::vector<int>& sign) const;
  // p(x) -> p(x + shift)
  Poly shifted(const std::vector<Rational>& shift) const;
  // general linear substitution x_i -> images[i]
  Poly substitute(const std::vector<Poly>& images) const;

  // exact quotient; throws std::domain_error when d does not divide *this
  Poly divide_exact(const Poly& d) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_ = 0;
  std::map<Exponent, Rational> terms_;
};

Poly pow(const Poly& p, int e);
inline bool is_zero(const Poly& p) { return p.is_zero(); }

}  // namespace gaha
