#include "gaha/poly.hpp"

#include <stdexcept>

namespace gaha {

Poly::Poly(int nvars, const Rational& c) : nvars_(nvars) {
  if (sgn(c) != 0) terms_.emplace(Exponent(nvars, 0), c);
}

Poly Poly::variable(int nvars, int i, const Rational& coeff) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  return monomial(e, coeff);
}

Poly Poly::monomial(const Exponent& e, const Rational& coeff) {
  Poly p(static_cast<int>(e.size()));
  p.add_term(e, coeff);
  return p;
}

Poly Poly::linear(const std::vector<Rational>& coeffs) {
  int n = static_cast<int>(coeffs.size());
  Poly p(n);
  for (int i = 0; i < n; ++i)
    if (sgn(coeffs[i]) != 0) p += variable(n, i, coeffs[i]);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree() == 0);
}

Rational Poly::constant_term() const { return coeff(Exponent(nvars_, 0)); }

Rational Poly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  if (static_cast<int>(e.size()) != nvars_) {
    if (nvars_ == 0 && terms_.empty())
      nvars_ = static_cast<int>(e.size());
    else
      throw std::invalid_argument("exponent length mismatch");
  }
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(std::max(a.nvars_, b.nvars_));
  Exponent e(r.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < r.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Rational Poly::eval(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != nvars_ && !terms_.empty())
    throw std::invalid_argument("evaluation point has wrong dimension");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    total += t;
  }
  return total;
}

Poly Poly::signed_permute(const std::vector<int>& perm, const std::vector<int>& sgnv) const {
  Poly r(nvars_);
  Exponent f(nvars_);
  for (const auto& [e, c] : terms_) {
    int s = 1;
    for (int i = 0; i < nvars_; ++i) {
      f[perm[i]] = e[i];
      if (sgnv[i] < 0 && (e[i] & 1)) s = -s;
    }
    r.add_term(f, s > 0 ? c : Rational(-c));
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  int m = images.empty() ? 0 : images[0].nvars();
  Poly r(m);
  for (const auto& [e, c] : terms_) {
    Poly t(m, c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i]) t = t * pow(images[i], e[i]);
    r += t;
  }
  return r;
}

Poly Poly::shifted(const std::vector<Rational>& shift) const {
  std::vector<Poly> img;
  img.reserve(nvars_);
  for (int i = 0; i < nvars_; ++i) img.push_back(variable(nvars_, i) + Poly(nvars_, shift[i]));
  return substitute(img);
}

Poly Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  // lex-leading term division; std::map is lex ordered so rbegin is leading
  Poly rem = *this, q(nvars_);
  const auto& [ld, lc] = *d.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& [lr, rc] = *rem.terms_.rbegin();
    Exponent e(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      e[i] = lr[i] - ld[i];
      if (e[i] < 0) throw std::domain_error("polynomial division is not exact");
    }
    Poly t = monomial(e, rc / lc);
    q += t;
    rem -= t * d;
  }
  return q;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto name = [&](int i) {
    return i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i + 1);
  };
  std::string out;
  // highest degree first reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rational a = abs(c);
    std::string coef = gaha::to_string(a);
    std::string term;
    if (mono.empty())
      term = coef;
    else if (a == 1)
      term = mono;
    else
      term = coef + "*" + mono;
    if (out.empty())
      out = sgn(c) < 0 ? "-" + term : term;
    else
      out += (sgn(c) < 0 ? " - " : " + ") + term;
  }
  return out;
}

Poly pow(const Poly& p, int e) {
  Poly r(p.nvars(), 1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

}  // namespace gaha
