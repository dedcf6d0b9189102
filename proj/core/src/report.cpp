#include "gaha/report.hpp"

#include <json.hpp>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gaha/hecke.hpp"
#include "gaha/lie_model.hpp"
#include "gaha/oda.hpp"
#include "gaha/principal_series.hpp"
#include "gaha/tensor_model.hpp"

namespace gaha {

Suite parse_suite(const std::string& s) {
  if (s == "relations") return Suite::Relations;
  if (s == "tensor") return Suite::Tensor;
  if (s == "oda") return Suite::Oda;
  if (s == "all") return Suite::All;
  throw std::invalid_argument("unknown suite '" + s + "' (relations, tensor, oda, all)");
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

namespace {

std::string complexification(const GroupDescriptor& g) {
  switch (g.family) {
    case Family::GL: return "GL(" + std::to_string(g.n) + ",C)";
    case Family::U: return "GL(" + std::to_string(g.p + g.q) + ",C)";
    case Family::Sp: return "Sp(" + std::to_string(2 * g.n) + ",C)";
    case Family::O: return "O(" + std::to_string(g.p + g.q) + ",C)";
  }
  return "?";
}

std::string c_lines(const std::map<std::string, Rational>& c, const std::string& prefix) {
  std::string s;
  if (c.size() == 1 && c.count("all")) return prefix + "c == " + to_string(c.at("all")) + "\n";
  // short before long, as in the table
  for (const char* key : {"short", "long"})
    if (c.count(key)) s += prefix + "c(" + key + ") = " + to_string(c.at(key)) + "\n";
  return s;
}

std::string nu_text(const std::vector<Rational>& nu) {
  std::string s;
  for (std::size_t i = 0; i < nu.size(); ++i) s += (i ? "," : "") + to_string(nu[i]);
  return s;
}

ReportItem item(const std::string& check, const GroupDescriptor& g, const CheckResult& r,
                std::vector<std::pair<std::string, std::string>> params = {}) {
  ReportItem it;
  it.check = check;
  it.group = g.name();
  it.parameters = std::move(params);
  it.status = r.ok ? Status::Pass : Status::Fail;
  it.checks = r.checks;
  it.witness = r.failure;
  return it;
}

ReportItem skipped(const std::string& check, const GroupDescriptor& g, const std::string& why) {
  ReportItem it;
  it.check = check;
  it.group = g.name();
  it.status = Status::Skipped;
  it.witness = why;
  return it;
}

void relations_suite(const GroupDescriptor& g, const VerifyOptions& opt, std::vector<ReportItem>& out) {
  auto H = std::make_shared<const HeckeAlgebra>(HeckeAlgebra::for_group(g));
  if (H->nvars() > 4 && !opt.force) {
    out.push_back(skipped("relations", g, "rank above 4; pass --force"));
    return;
  }
  RelationReport rr = H->verify_relations(opt.trials);
  CheckResult hr;
  hr.ok = rr.ok;
  hr.checks = rr.checks;
  hr.failure = rr.failure;
  out.push_back(item("hecke_relations", g, hr, {{"algebra", H->name()}, {"trials", std::to_string(opt.trials)}}));

  SymbolicPS sym(H, opt.force ? 8 : 4);
  for (const auto& nu : sample_nus(H->nvars(), 5, 7)) {
    PSModule ps = sym.at(nu);
    CheckResult r = check_module_relations(ps);
    std::size_t kd = krylov_dimension(ps);
    r.expect(kd == ps.dim(), "1 (x) 1 spans " + std::to_string(kd) + " of " + std::to_string(ps.dim()));
    r.absorb(check_regular_character(ps));
    out.push_back(item("principal_series", g, r, {{"nu", nu_text(nu)}}));
  }

  PSModule ps0 = sym.at(std::vector<Rational>(H->nvars(), Rational(0)));
  InvariantForm f = hermitian_form(ps0);
  CheckResult r;
  if (f.status == FormStatus::Hermitian) {
    r.expect(signature(f.matrix) == Inertia{ps0.dim(), 0, 0}, "form at nu = 0 is not positive definite");
    r.absorb(check_form_invariance(ps0, f.matrix, 20));
  } else {
    // extra symmetry when c vanishes: the space of forms must contain a definite one
    r.expect(f.status == FormStatus::Degenerate, "no invariant form at nu = 0");
    QMatrix id = QMatrix::identity(ps0.dim());
    r.absorb(check_form_invariance(ps0, id, 20));
  }
  out.push_back(item("form_at_zero", g, r, {{"nu", "0"}, {"status", to_string(f.status)}}));
}

void tensor_suite_items(const GroupDescriptor& g, const VerifyOptions& opt, std::vector<ReportItem>& out) {
  if (g.real_rank() > 3 && !opt.force) {
    out.push_back(skipped("tensor", g, "real rank above 3; pass --force"));
    return;
  }
  for (const auto& rep : tensor_suite(g)) out.push_back(item(rep.check, g, rep.result, {{"k", std::to_string(g.real_rank())}}));
}

void oda_suite_items(const GroupDescriptor& g, const VerifyOptions& opt, std::vector<ReportItem>& out) {
  int k = g.real_rank();
  bool in_range = k == 1 || (g.family == Family::GL && k <= 3);
  if (!in_range && !opt.force) {
    out.push_back(skipped("oda", g, "oda suites run on rank one and GL(n<=3,R); pass --force"));
    return;
  }
  OdaOptions o;
  o.degree = opt.degree;
  o.nus = sample_nus(k, 3, 5);
  std::vector<OdaReport> reps;
  try {
    reps = oda_suite(g, o);
  } catch (const std::invalid_argument& e) {
    out.push_back(skipped("oda", g, e.what()));
    return;
  }
  std::string d = std::to_string(opt.degree);
  for (const auto& rep : reps) out.push_back(item(rep.check, g, rep.result, {{"degree", d}}));
  if (k == 1) {
    int hd = std::min(opt.degree, 2);
    std::vector<std::vector<Rational>> nus = {{Rational(0)}, {make_rational(1, 3)}, {make_rational(7, 2)}};
    auto tr = hermitian_transfer(g, hd, nus);
    std::string pts;
    for (const auto& p : tr.points)
      pts += (pts.empty() ? "" : " ") + nu_text(p.nu) + ":" + to_string(p.scale);
    out.push_back(item("hermitian_transfer", g, tr.result, {{"degree", std::to_string(hd)}, {"scales", pts}}));
  }
}

}  // namespace

std::vector<std::vector<Rational>> sample_nus(int rank, int count, std::uint64_t seed) {
  // raw engine output is fixed by the standard, distributions are not
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Rational>> out;
  for (int c = 0; c < count; ++c) {
    std::vector<Rational> nu;
    for (int i = 0; i < rank; ++i) {
      long n = static_cast<long>(rng() % 19) - 9;
      long d = static_cast<long>(rng() % 9) + 2;
      nu.push_back(make_rational(n, d));
    }
    out.push_back(std::move(nu));
  }
  return out;
}

std::string info_text(const GroupDescriptor& g) {
  TableEntry t = restricted_root_datum(g);
  std::ostringstream os;
  os << "group: " << g.name() << "\n";
  os << "complex group: " << complexification(g) << "\n";
  os << "Phi: " << t.phi.name() << "\n";
  os << "Phi_o: " << type_name(t.reduced_type, t.phi.rank) << "\n";
  os << c_lines(t.table_c, "");
  os << "algebra: " << t.algebra << "\n";
  os << "|W_R|: " << t.weyl_order << "\n";
  os << "k: " << t.real_rank << "\n";
  os << "root spaces:";
  for (const auto& [orbit, dim] : t.root_space_dims) os << " " << orbit << "=" << dim;
  os << "\n";
  os << c_lines(t.raw_c, "raw ");
  os << "rescale: " << to_string(t.rescale) << "\n";
  if (!t.metadata.empty()) os << "metadata: " << t.metadata << "\n";
  return os.str();
}

std::vector<ReportItem> run_verify(const GroupDescriptor& g, const VerifyOptions& opt) {
  std::vector<ReportItem> out;
  if (opt.suite == Suite::Relations || opt.suite == Suite::All) relations_suite(g, opt, out);
  if (opt.suite == Suite::Tensor || opt.suite == Suite::All) tensor_suite_items(g, opt, out);
  if (opt.suite == Suite::Oda || opt.suite == Suite::All) oda_suite_items(g, opt, out);
  return out;
}

bool all_passed(const std::vector<ReportItem>& items) {
  for (const auto& it : items)
    if (it.status == Status::Fail) return false;
  return true;
}

std::string report_json(const std::vector<ReportItem>& items) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& it : items) {
    nlohmann::ordered_json j;
    j["check"] = it.check;
    j["group"] = it.group;
    j["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : it.parameters) j["parameters"][k] = v;
    j["status"] = to_string(it.status);
    j["checks"] = it.checks;
    j["witness"] = it.witness;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

}  // namespace gaha
