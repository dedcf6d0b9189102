#include "gaha/roots.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace gaha {

std::string GroupDescriptor::name() const {
  switch (family) {
    case Family::GL: return "GL(" + std::to_string(n) + ",R)";
    case Family::Sp: return "Sp(" + std::to_string(2 * n) + ",R)";
    case Family::U: return "U(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case Family::O: return "O(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
  return "?";
}

int GroupDescriptor::dim_v() const {
  switch (family) {
    case Family::GL: return n;
    case Family::Sp: return 2 * n;
    default: return p + q;
  }
}

int GroupDescriptor::real_rank() const {
  switch (family) {
    case Family::GL:
    case Family::Sp: return n;
    default: return q;
  }
}

GroupDescriptor parse_group(std::string_view s) {
  static const std::regex re(R"(\s*(GL|U|Sp|O)\s*\(\s*(\d{1,3})\s*,\s*(R|\d{1,3})\s*\)\s*)");
  std::string str(s);
  std::smatch m;
  if (!std::regex_match(str, m, re)) throw std::invalid_argument("cannot parse group '" + str + "'");
  std::string fam = m[1], a = m[2], b = m[3];
  GroupDescriptor g;
  int x = std::stoi(a);
  if (fam == "GL" || fam == "Sp") {
    if (b != "R") throw std::invalid_argument(fam + " needs the form " + fam + "(n,R)");
    if (fam == "GL") {
      g.family = Family::GL;
      if (x < 1) throw std::invalid_argument("GL(n,R) needs n >= 1");
      g.n = x;
    } else {
      g.family = Family::Sp;
      if (x < 2 || x % 2) throw std::invalid_argument("Sp(2n,R) needs a positive even size");
      g.n = x / 2;
    }
    return g;
  }
  if (b == "R") throw std::invalid_argument(fam + " needs the form " + fam + "(p,q)");
  g.family = fam == "U" ? Family::U : Family::O;
  g.p = x;
  g.q = std::stoi(b);
  if (g.p < g.q) throw std::invalid_argument("need p >= q in " + str);
  if (g.q < 1) throw std::invalid_argument("real rank zero (q = 0) has no restricted roots");
  if (g.family == Family::O && g.p == 1 && g.q == 1) throw std::invalid_argument("O(1,1) gives D_1, which is rejected");
  return g;
}

std::string type_name(RootType t, int rank) {
  static const char* names[] = {"A", "B", "C", "BC", "D"};
  return names[static_cast<int>(t)] + std::to_string(rank);
}

int dot(const Root& a, const Root& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

// --- WeylElement

WeylElement::WeylElement(int n) : perm_(n), sign_(n, 1) { std::iota(perm_.begin(), perm_.end(), 0); }

WeylElement::WeylElement(std::vector<int> perm, std::vector<int> sign) : perm_(std::move(perm)), sign_(std::move(sign)) {
  if (perm_.size() != sign_.size()) throw std::invalid_argument("signed permutation size mismatch");
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    int j = perm_[i];
    if (j < 0 || j >= size() || seen[j]) throw std::invalid_argument("not a permutation");
    seen[j] = true;
    if (sign_[i] != 1 && sign_[i] != -1) throw std::invalid_argument("sign must be +-1");
  }
}

bool WeylElement::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (perm_[i] != i || sign_[i] != 1) return false;
  return true;
}

int WeylElement::flips() const {
  return static_cast<int>(std::count(sign_.begin(), sign_.end(), -1));
}

WeylElement WeylElement::inverse() const {
  WeylElement w(size());
  for (int i = 0; i < size(); ++i) {
    w.perm_[perm_[i]] = i;
    w.sign_[perm_[i]] = sign_[i];
  }
  return w;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Weyl elements of different rank");
  WeylElement w(a.size());
  for (int i = 0; i < a.size(); ++i) {
    w.perm_[i] = a.perm_[b.perm_[i]];
    w.sign_[i] = b.sign_[i] * a.sign_[b.perm_[i]];
  }
  return w;
}

Root WeylElement::act(const Root& v) const {
  Root out(v.size(), 0);
  for (int i = 0; i < size(); ++i) out[perm_[i]] = sign_[i] * v[i];
  return out;
}

std::vector<Rational> WeylElement::act(const std::vector<Rational>& v) const {
  std::vector<Rational> out(v.size());
  for (int i = 0; i < size(); ++i) out[perm_[i]] = sign_[i] * v[i];
  return out;
}

std::string WeylElement::to_string() const {
  // images of e_1..e_n
  std::string s = "[";
  for (int i = 0; i < size(); ++i) {
    if (i) s += ",";
    s += (sign_[i] < 0 ? "-" : "") + std::to_string(perm_[i] + 1);
  }
  return s + "]";
}

// --- RootDatum

namespace {

Root unit(int n, int i, int c = 1) {
  Root r(n, 0);
  r[i] = c;
  return r;
}

bool first_nonzero_positive(const Root& r) {
  for (int x : r)
    if (x) return x > 0;
  return false;
}

}  // namespace

RootDatum RootDatum::make(RootType t, int rank) {
  if (rank < 1 && t != RootType::A) throw std::invalid_argument("rank must be positive");
  if (rank < 0) throw std::invalid_argument("rank must be nonnegative");
  if (t == RootType::D && rank < 2) throw std::invalid_argument("D_1 is rejected");
  RootDatum rd;
  rd.type = t;
  rd.rank = rank;
  int n = t == RootType::A ? rank + 1 : rank;
  rd.ncoords = n;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Root r(n, 0);
      r[i] = 1;
      r[j] = -1;
      rd.roots.push_back(r);
      if (t != RootType::A && i < j) {
        Root a(n, 0), b(n, 0);
        a[i] = a[j] = 1;
        b[i] = b[j] = -1;
        rd.roots.push_back(a);
        rd.roots.push_back(b);
      }
    }
  for (int i = 0; i < n; ++i) {
    if (t == RootType::B || t == RootType::BC) {
      rd.roots.push_back(unit(n, i, 1));
      rd.roots.push_back(unit(n, i, -1));
    }
    if (t == RootType::C || t == RootType::BC) {
      rd.roots.push_back(unit(n, i, 2));
      rd.roots.push_back(unit(n, i, -2));
    }
  }
  std::sort(rd.roots.begin(), rd.roots.end());

  // Phi_o keeps a unless a/2 is a root (the reading that makes BC_q reduce to B_q)
  for (const auto& r : rd.roots) {
    bool halvable = std::all_of(r.begin(), r.end(), [](int x) { return x % 2 == 0; });
    Root h = r;
    for (int& x : h) x /= 2;
    if (halvable && rd.is_root(h)) continue;
    rd.reduced.push_back(r);
  }
  for (const auto& r : rd.reduced)
    if (first_nonzero_positive(r)) rd.positive.push_back(r);

  for (int i = 0; i + 1 < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    r[i + 1] = -1;
    rd.simple.push_back(r);
  }
  switch (t) {
    case RootType::A: break;
    case RootType::B:
    case RootType::BC: rd.simple.push_back(unit(n, n - 1, 1)); break;
    case RootType::C: rd.simple.push_back(unit(n, n - 1, 2)); break;
    case RootType::D: {
      Root r(n, 0);
      r[n - 2] = r[n - 1] = 1;
      rd.simple.push_back(r);
      break;
    }
  }
  return rd;
}

bool RootDatum::is_root(const Root& r) const { return std::binary_search(roots.begin(), roots.end(), r); }

bool RootDatum::is_reduced_root(const Root& r) const {
  return std::find(reduced.begin(), reduced.end(), r) != reduced.end();
}

WeylElement RootDatum::reflection(const Root& a) const {
  int aa = dot(a, a);
  if (aa == 0) throw std::invalid_argument("zero root");
  std::vector<int> perm(ncoords), sign(ncoords);
  for (int i = 0; i < ncoords; ++i) {
    Root e = unit(ncoords, i);
    // s_a e = e - 2<e,a>/<a,a> a
    int num = 2 * a[i];
    if (num % aa) throw std::logic_error("reflection is not a signed permutation");
    Root img = e;
    for (int j = 0; j < ncoords; ++j) img[j] -= (num / aa) * a[j];
    int found = -1;
    for (int j = 0; j < ncoords; ++j)
      if (img[j] != 0) {
        if (found >= 0 || (img[j] != 1 && img[j] != -1)) throw std::logic_error("reflection is not a signed permutation");
        found = j;
      }
    perm[i] = found;
    sign[i] = img[found];
  }
  return WeylElement(perm, sign);
}

std::vector<WeylElement> RootDatum::simple_reflections() const {
  std::vector<WeylElement> g;
  for (const auto& a : simple) g.push_back(reflection(a));
  return g;
}

// --- WeylGroup

WeylGroup::WeylGroup(std::vector<WeylElement> generators, int ncoords, std::size_t max_order) : gens_(std::move(generators)) {
  WeylElement e(ncoords);
  elems_.push_back(e);
  words_.push_back({});
  index_[e] = 0;
  for (std::size_t head = 0; head < elems_.size(); ++head) {
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      // extend on the right so that words stay reduced left to right
      WeylElement w = elems_[head] * gens_[g];
      if (index_.count(w)) continue;
      if (elems_.size() >= max_order) throw std::length_error("Weyl group larger than the configured bound");
      index_[w] = elems_.size();
      elems_.push_back(w);
      auto word = words_[head];
      word.push_back(static_cast<int>(g));
      words_.push_back(std::move(word));
    }
  }
}

std::size_t WeylGroup::index(const WeylElement& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw std::out_of_range("element not in Weyl group");
  return it->second;
}

std::vector<WeylElement> weyl_enumerate(const RootDatum& rd, int max_rank) {
  if (rd.rank > max_rank) throw std::length_error("rank " + std::to_string(rd.rank) + " exceeds bound " + std::to_string(max_rank));
  return WeylGroup(rd.simple_reflections(), rd.ncoords).elements();
}

// --- ParameterFunction

ParameterFunction::ParameterFunction(const RootDatum& rd, std::map<Root, Rational> positive_values) {
  for (const auto& a : rd.positive) {
    auto it = positive_values.find(a);
    if (it == positive_values.end()) throw std::invalid_argument("parameter missing on a positive root");
    Root neg = a;
    for (int& x : neg) x = -x;
    vals_[a] = it->second;
    vals_[neg] = it->second;
  }
  if (positive_values.size() != rd.positive.size()) throw std::invalid_argument("parameter given on a non-root");
  for (const auto& s : rd.simple_reflections())
    for (const auto& [a, c] : vals_)
      if (vals_.at(s.act(a)) != c) throw std::invalid_argument("parameter function is not W-invariant");
}

Rational ParameterFunction::operator()(const Root& a) const {
  auto it = vals_.find(a);
  if (it == vals_.end()) throw std::out_of_range("not a reduced root");
  return it->second;
}

// --- Table of H(G_R)

namespace {

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string rat_label(const Rational& c) { return to_string(c); }

}  // namespace

TableEntry restricted_root_datum(const GroupDescriptor& g) {
  TableEntry t;
  t.group = g;
  int k = g.real_rank();
  t.real_rank = k;
  Rational shortc, longc;  // raw values on e_i +- e_j and on the e_i / 2e_i class
  switch (g.family) {
    case Family::GL:
      t.phi = RootDatum::make(RootType::A, k - 1);
      t.reduced_type = RootType::A;
      if (k >= 2) t.root_space_dims = {{"e_i-e_j", 1}};
      t.raw_c = {{"all", 1}};
      t.table_c = {{"all", 1}};
      t.rescale = 1;
      t.type_a = true;
      t.algebra = "H_" + std::to_string(k);
      t.weyl_order = t.reduced_weyl_order = factorial(k);
      return t;
    case Family::U:
      if (g.p == g.q) {
        t.phi = RootDatum::make(RootType::C, k);
        t.reduced_type = RootType::C;
        t.root_space_dims = {{"2e_i", 1}};
        shortc = 2;
        longc = 1;  // on 2e_i
        t.table_c = {{"short", 2}, {"long", 1}};
        t.rescale = Rational(1, 2);
        t.ctilde = t.rescale * longc;
      } else {
        t.phi = RootDatum::make(RootType::BC, k);
        t.reduced_type = RootType::B;
        t.root_space_dims = {{"e_i", 2 * (g.p - g.q)}, {"2e_i", 1}};
        shortc = 2;
        longc = 2 * (g.p - g.q) + 2 * 1;  // on e_i, with 2e_i folded in
        // the table prints these halved
        t.table_c = {{"short", 1}, {"long", g.p - g.q + 1}};
        t.rescale = Rational(1, 2);
        t.ctilde = t.rescale * longc / 2;
      }
      if (k >= 2) t.root_space_dims["e_i+-e_j"] = 2;
      break;
    case Family::Sp:
      t.phi = RootDatum::make(RootType::C, k);
      t.reduced_type = RootType::C;
      t.root_space_dims = {{"2e_i", 1}};
      if (k >= 2) t.root_space_dims["e_i+-e_j"] = 1;
      shortc = 1;
      longc = 1;
      t.table_c = {{"all", 1}};
      t.rescale = 1;
      t.ctilde = longc;
      break;
    case Family::O:
      if (g.p == g.q) {
        t.phi = RootDatum::make(RootType::D, k);
        t.reduced_type = RootType::D;
        t.root_space_dims = {{"e_i+-e_j", 1}};
        t.raw_c = {{"all", 1}};
        t.table_c = {{"all", 1}};
        t.rescale = 1;
        t.ctilde = 0;
        t.algebra = "H~_" + std::to_string(k) + "(0)";
        t.reduced_weyl_order = factorial(k) << (k - 1);
        t.weyl_order = factorial(k) << k;
        t.metadata = "H~_" + std::to_string(k) + "(0) = H(D_" + std::to_string(k) + ",1) x| Z/2Z";
        return t;
      }
      t.phi = RootDatum::make(RootType::B, k);
      t.reduced_type = RootType::B;
      t.root_space_dims = {{"e_i", g.p - g.q}};
      if (k >= 2) t.root_space_dims["e_i+-e_j"] = 1;
      shortc = 1;
      longc = g.p - g.q;
      t.table_c = {{"short", 1}, {"long", g.p - g.q}};
      t.rescale = 1;
      t.ctilde = longc / 2;
      break;
  }
  if (k >= 2) t.raw_c["short"] = shortc;
  t.raw_c["long"] = longc;
  if (k < 2) t.table_c.erase("short");
  t.algebra = "H~_" + std::to_string(k) + "(" + rat_label(t.ctilde) + ")";
  t.weyl_order = t.reduced_weyl_order = factorial(k) << k;
  return t;
}

}  // namespace gaha
