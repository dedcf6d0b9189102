#include "gaha/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace gaha {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto digits_ok = [](std::string_view t, bool allow_sign) {
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw std::invalid_argument("bad rational literal: " + std::string(s));
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Integer zn(n, 10), zd(std::string(den), 10);
  if (zd == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
  Rational q(zn, zd);
  q.canonicalize();
  return q;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  Rational d = o.norm();
  if (sgn(d) == 0) throw std::domain_error("division by zero");
  GaussRational t = *this * o.conj();
  re = t.re / d;
  im = t.im / d;
  return *this;
}

std::string to_string(const GaussRational& z) {
  if (z.is_real()) return to_string(z.re);
  std::string im = to_string(z.im) + "i";
  if (sgn(z.re) == 0) return im;
  return to_string(z.re) + (sgn(z.im) > 0 ? "+" : "") + im;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << to_string(z); }

}  // namespace gaha
