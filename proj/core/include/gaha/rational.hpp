#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace gaha {

// mpq_class keeps itself canonical after arithmetic; only raw
// num/den assignment needs an explicit canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class(n, d) does not reduce; use this for computed n, d
inline Rational make_rational(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view s);  // "3", "-1/2", " 7/14 "

inline int sign(const Rational& q) { return sgn(q); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

struct GaussRational {
  Rational re, im;

  GaussRational() = default;
  GaussRational(const Rational& r) : re(r) {}  // NOLINT: implicit on purpose
  GaussRational(long r) : re(r) {}             // NOLINT
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i() { return {0, 1}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussRational& operator+=(const GaussRational& o) { re += o.re; im += o.im; return *this; }
  GaussRational& operator-=(const GaussRational& o) { re -= o.re; im -= o.im; return *this; }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  GaussRational operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const GaussRational& z);
std::ostream& operator<<(std::ostream& os, const GaussRational& z);

// Uniform access for templated linear algebra.
inline bool is_zero(const GaussRational& z) { return z.is_zero(); }
inline Rational conj(const Rational& q) { return q; }
inline GaussRational conj(const GaussRational& z) { return z.conj(); }

}  // namespace gaha
