#include "gaha/enveloping.hpp"

#include <stdexcept>

namespace gaha {

void add_to(UElem& u, const Word& w, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = u.emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (is_zero(it->second)) u.erase(it);
}

void add_to(UElem& u, const UElem& v, const Rational& c) {
  for (const auto& [w, x] : v) add_to(u, w, x * c);
}

UElem concat(const UElem& a, const UElem& b) {
  UElem out;
  for (const auto& [w1, c1] : a)
    for (const auto& [w2, c2] : b) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      add_to(out, w, c1 * c2);
    }
  return out;
}

Enveloping::Enveloping(std::shared_ptr<const LieModel> L) : L_(std::move(L)) {
  const LieModel& M = *L_;
  letters_ = M.n_basis();
  nn_ = static_cast<int>(letters_.size());
  for (const auto& e : M.hecke_eps()) letters_.push_back(e);
  na_ = static_cast<int>(M.hecke_eps().size());
  for (const auto& x : M.k_basis()) letters_.push_back(x);
  coords_ = SpanCoords(letters_);
  if (coords_.size() != M.basis().size()) throw std::logic_error("Enveloping: n + a + k is not a basis of g");

  const int n = size();
  sc_.resize(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto c = coords_.coords(letters_[i] * letters_[j] - letters_[j] * letters_[i]);
      for (int l = 0; l < n; ++l)
        if (!is_zero(c[l])) sc_[i * n + j].emplace_back(l, c[l]);
    }
  for (int i = 0; i < n; ++i) {
    QMatrix d = real_part_checked(M.sigma(to_gauss(letters_[i]))) * Rational(-1);
    dagger_.push_back(element(d));
  }
}

UElem Enveloping::element(const QMatrix& x) const {
  auto c = coords_.coords(x);
  UElem u;
  for (int l = 0; l < size(); ++l) add_to(u, Word{l}, c[l]);
  return u;
}

const UElem& Enveloping::normal_word(const Word& w) const {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  UElem res;
  std::size_t p = 0;
  while (p + 1 < w.size() && w[p] <= w[p + 1]) ++p;
  if (p + 1 >= w.size()) {
    res.emplace(w, Rational(1));
  } else {
    // y x = x y + [y, x]
    Word sw = w;
    std::swap(sw[p], sw[p + 1]);
    add_to(res, normal_word(sw));
    for (const auto& [l, c] : bracket(w[p], w[p + 1])) {
      Word b(w.begin(), w.begin() + p);
      b.push_back(l);
      b.insert(b.end(), w.begin() + p + 2, w.end());
      add_to(res, normal_word(b), c);
    }
  }
  return memo_.emplace(w, std::move(res)).first->second;
}

UElem Enveloping::normal(const UElem& u) const {
  UElem out;
  for (const auto& [w, c] : u) add_to(out, normal_word(w), c);
  return out;
}

UElem Enveloping::coset(const UElem& u) const {
  UElem out;
  for (const auto& [w, c] : u)
    for (const auto& [nw, x] : normal_word(w))
      if (nw.empty() || !is_k(nw.back())) add_to(out, nw, c * x);
  return out;
}

UElem Enveloping::adjoint(const QMatrix& g, const UElem& u) const {
  QMatrix gi = *inverse(g);
  std::vector<UElem> img;
  for (int l = 0; l < size(); ++l) img.push_back(element(g * letters_[l] * gi));
  UElem out;
  for (const auto& [w, c] : u) {
    UElem t{{Word{}, c}};
    for (int l : w) t = concat(t, img[l]);
    add_to(out, coset(t));
  }
  return out;
}

UElem Enveloping::dagger(const UElem& u) const {
  UElem out;
  for (const auto& [w, c] : u) {
    UElem t{{Word{}, c}};
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = concat(t, dagger_[*it]);
    add_to(out, t);
  }
  return out;
}

Poly Enveloping::gamma0(const UElem& u) const {
  Poly p(na_);
  for (const auto& [w, c] : u) {
    bool pure = true;
    Exponent e(na_, 0);
    for (int l : w) {
      if (!is_a(l)) {
        pure = false;
        break;
      }
      ++e[l - nn_];
    }
    if (pure) p.add_term(e, c);
  }
  return p;
}

CheckResult Enveloping::check_structure() const {
  CheckResult r;
  const int n = size();
  auto br = [&](const UElem& x, int j) {
    UElem out;
    for (const auto& [w, c] : x)
      for (const auto& [l, d] : bracket(w[0], j)) add_to(out, Word{l}, c * d);
    return out;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      UElem a, b;
      for (const auto& [l, c] : bracket(i, j)) add_to(a, Word{l}, c);
      for (const auto& [l, c] : bracket(j, i)) add_to(b, Word{l}, -c);
      r.expect(a == b, "structure constants not antisymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      for (int k = j + 1; k < n; ++k) {
        // [[i,j],k] + [[j,k],i] + [[k,i],j]
        UElem ij, jk, ki;
        for (const auto& [l, c] : bracket(i, j)) add_to(ij, Word{l}, c);
        for (const auto& [l, c] : bracket(j, k)) add_to(jk, Word{l}, c);
        for (const auto& [l, c] : bracket(k, i)) add_to(ki, Word{l}, c);
        UElem s = br(ij, k);
        add_to(s, br(jk, i));
        add_to(s, br(ki, j));
        if (!s.empty()) {
          r.expect(false, "Jacobi fails at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
          return r;
        }
        ++r.checks;
      }
    }
  return r;
}

std::vector<Word> truncated_words(const Enveloping& U, int d) {
  const int m = U.num_n() + U.num_a();
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (int deg = 1; deg <= d; ++deg) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int l = w.empty() ? 0 : w.back(); l < m; ++l) {
        Word x = w;
        x.push_back(l);
        next.push_back(x);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace gaha
