#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gaha/rational.hpp"

namespace gaha {

enum class Family { GL, U, Sp, O };

struct GroupDescriptor {
  Family family = Family::GL;
  int n = 0;  // GL(n,R), Sp(2n,R)
  int p = 0;  // U(p,q), O(p,q)
  int q = 0;

  std::string name() const;
  int dim_v() const;
  int real_rank() const;
  bool equal_rank() const { return family != Family::GL; }
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

// "GL(3,R)", "U(2,1)", "Sp(4,R)", "O(3,2)"; throws std::invalid_argument
GroupDescriptor parse_group(std::string_view s);

enum class RootType { A, B, C, BC, D };
std::string type_name(RootType t, int rank);

using Root = std::vector<int>;
int dot(const Root& a, const Root& b);

// Signed permutation: e_i -> sign[i] e_{perm[i]}.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(int n);
  WeylElement(std::vector<int> perm, std::vector<int> sign);

  int size() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& sign() const { return sign_; }
  bool is_identity() const;
  int flips() const;

  WeylElement inverse() const;
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

  Root act(const Root& v) const;
  std::vector<Rational> act(const std::vector<Rational>& v) const;

  std::string to_string() const;  // e.g. "[-2,1]" in one-line notation

 private:
  std::vector<int> perm_, sign_;
};

struct RootDatum {
  RootType type = RootType::A;
  int rank = 0;     // semisimple rank
  int ncoords = 0;  // number of ambient coordinates (= number of epsilons)
  std::vector<Root> roots;     // Phi
  std::vector<Root> reduced;   // Phi_o
  std::vector<Root> positive;  // positive part of Phi_o
  std::vector<Root> simple;

  // A_{rank} uses rank+1 coordinates, the others use rank.
  static RootDatum make(RootType t, int rank);

  bool is_root(const Root& r) const;
  bool is_reduced_root(const Root& r) const;
  WeylElement reflection(const Root& a) const;
  std::vector<WeylElement> simple_reflections() const;
  std::string name() const { return type_name(type, rank); }
};

// Weyl group of the reduced system, breadth first from the identity so
// that the word attached to each element is reduced.
class WeylGroup {
 public:
  WeylGroup(std::vector<WeylElement> generators, int ncoords, std::size_t max_order = 1u << 16);

  const std::vector<WeylElement>& elements() const { return elems_; }
  const std::vector<WeylElement>& generators() const { return gens_; }
  std::size_t size() const { return elems_.size(); }
  std::size_t index(const WeylElement& w) const;
  // generator indices, leftmost first: w = g[word[0]] * g[word[1]] * ...
  const std::vector<int>& word(std::size_t i) const { return words_[i]; }
  int length(std::size_t i) const { return static_cast<int>(words_[i].size()); }

 private:
  std::vector<WeylElement> gens_, elems_;
  std::vector<std::vector<int>> words_;
  std::map<WeylElement, std::size_t> index_;
};

// Enumerate W(rd); rejects rank above max_rank.
std::vector<WeylElement> weyl_enumerate(const RootDatum& rd, int max_rank = 6);

// W-invariant function on Phi_o, keyed by root.
class ParameterFunction {
 public:
  ParameterFunction() = default;
  // values must be given on every positive root; throws std::invalid_argument
  // unless they are constant on W-orbits
  ParameterFunction(const RootDatum& rd, std::map<Root, Rational> positive_values);
  Rational operator()(const Root& a) const;
  const std::map<Root, Rational>& values() const { return vals_; }

 private:
  std::map<Root, Rational> vals_;
};

// One row of the table of H(G_R).
struct TableEntry {
  GroupDescriptor group;
  RootDatum phi;             // restricted roots, possibly nonreduced
  RootType reduced_type;     // type of Phi_o
  int real_rank = 0;
  // real dimension of each restricted root space, keyed by orbit label
  std::map<std::string, int> root_space_dims;
  // c = dim g_a + 2 dim g_2a on Phi_o, keyed by "short"/"long"/"all"
  std::map<std::string, Rational> raw_c;
  std::map<std::string, Rational> table_c;  // as printed in the table
  Rational rescale;          // f -> rescale*f turns raw_c into the normalized algebra
  bool type_a = false;       // H_n rather than H~_k(c)
  Rational ctilde;           // parameter of H~_k(c)
  std::string algebra;       // "H_3", "H~_2(1/2)"
  std::size_t weyl_order = 0;       // |W_R| = |W| of the normalized algebra
  std::size_t reduced_weyl_order = 0;
  std::string metadata;      // O(q,q): index two subalgebra
};

TableEntry restricted_root_datum(const GroupDescriptor& g);

}  // namespace gaha
