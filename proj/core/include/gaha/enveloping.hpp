#pragma once

#include <map>
#include <memory>
#include <vector>

#include "gaha/check.hpp"
#include "gaha/lie_model.hpp"
#include "gaha/poly.hpp"

namespace gaha {

using Word = std::vector<int>;
using UElem = std::map<Word, Rational>;  // no zero coefficients

void add_to(UElem& u, const Word& w, const Rational& c);
void add_to(UElem& u, const UElem& v, const Rational& c = 1);
UElem concat(const UElem& a, const UElem& b);

// U(g) for a LieModel, on the ordered basis n < a < k. The a-letters are the
// Hecke eps_j, so gamma0 is a polynomial in the eps coordinates.
// Caches are per instance and unguarded: one instance per task.
class Enveloping {
 public:
  explicit Enveloping(std::shared_ptr<const LieModel> L);

  const LieModel& model() const { return *L_; }
  std::shared_ptr<const LieModel> model_ptr() const { return L_; }
  int size() const { return static_cast<int>(letters_.size()); }
  int num_n() const { return nn_; }
  int num_a() const { return na_; }
  int num_k() const { return size() - nn_ - na_; }
  bool is_a(int l) const { return l >= nn_ && l < nn_ + na_; }
  bool is_k(int l) const { return l >= nn_ + na_; }
  const QMatrix& letter(int l) const { return letters_[l]; }

  // x as a degree-one element; throws std::domain_error if x is not in g
  UElem element(const QMatrix& x) const;
  const std::vector<std::pair<int, Rational>>& bracket(int i, int j) const { return sc_[i * size() + j]; }

  // PBW normal form: every word nondecreasing
  UElem normal(const UElem& u) const;
  // image in U(g) (x)_{U(k)} 1: normal form with the k-tails dropped
  UElem coset(const UElem& u) const;
  UElem left(const QMatrix& x, const UElem& u) const { return coset(concat(element(x), u)); }
  // Ad(g) letter by letter, coset-reduced
  UElem adjoint(const QMatrix& g, const UElem& u) const;
  // the conjugate-linear antiautomorphism X -> -sigma(X); rational here since
  // sigma preserves the rational span of the basis. Not reduced.
  UElem dagger(const UElem& u) const;
  // pure a-words, as a polynomial in the eps coordinates
  Poly gamma0(const UElem& u) const;

  // antisymmetry and Jacobi for the structure constants
  CheckResult check_structure() const;

 private:
  const UElem& normal_word(const Word& w) const;

  std::shared_ptr<const LieModel> L_;
  int nn_ = 0, na_ = 0;
  std::vector<QMatrix> letters_;
  SpanCoords coords_;
  std::vector<std::vector<std::pair<int, Rational>>> sc_;
  std::vector<UElem> dagger_;
  mutable std::map<Word, UElem> memo_;
};

// normal-ordered words in the n- and a-letters of length <= d
std::vector<Word> truncated_words(const Enveloping& U, int d);

}  // namespace gaha
