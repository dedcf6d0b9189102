#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gaha/principal_series.hpp"
#include "gaha/report.hpp"

using namespace gaha;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GroupDescriptor group_arg(const std::string& s) {
  try {
    return parse_group(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<Rational> rational_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_rational(tok));
  return out;
}

std::vector<std::vector<Rational>> read_grid(const std::string& path, int rank) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read grid file " + path);
  std::vector<std::vector<Rational>> pts;
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (line.empty() || line[0] == '#') continue;
    auto nu = rational_list(line);
    if (static_cast<int>(nu.size()) != rank)
      throw UsageError(path + ":" + std::to_string(ln) + ": expected " + std::to_string(rank) + " coordinates");
    pts.push_back(std::move(nu));
  }
  return pts;
}

void write_out(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << data;
  if (!f) throw std::runtime_error("write failed for " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded affine Hecke algebras of classical real groups, exact arithmetic"};
  app.require_subcommand(1);

  std::string group;
  auto* info = app.add_subcommand("info", "restricted roots, parameters and the algebra H(G_R)");
  info->add_option("group", group, "GL(n,R), U(p,q), Sp(2n,R) or O(p,q)")->required();

  std::string suite = "all", out;
  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "run a verification suite and write a JSON report");
  verify->add_option("group", group)->required();
  verify->add_option("--suite", suite, "relations, tensor, oda or all")->capture_default_str();
  verify->add_option("--degree", vopt.degree, "truncation degree for the oda suite")->capture_default_str()->check(CLI::Range(0, 8));
  verify->add_option("--trials", vopt.trials, "random elements per relation check")->capture_default_str();
  verify->add_flag("--force", vopt.force, "lift rank guards (cost grows like |W| and dim V^k)");
  verify->add_option("--out", out, "report path (default stdout)");

  std::string line, grid, dir, format = "csv";
  unsigned threads = 0;
  auto* scan = app.add_subcommand("scan", "unitarity scan of the spherical principal series");
  scan->add_option("group", group)->required();
  auto* lopt = scan->add_option("--line", line, "t range a..b/n along --dir");
  auto* gopt = scan->add_option("--grid", grid, "file of nu points, one comma-separated row each");
  lopt->excludes(gopt);
  scan->add_option("--dir", dir, "direction for --line, comma separated (default: <dir, simple coroot> = 1)");
  scan->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  scan->add_option("--out", out, "output path (default stdout)");
  scan->add_option("--threads", threads, "worker threads (0 = auto); output order does not depend on it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*info) {
      std::cout << info_text(group_arg(group));
      return 0;
    }
    if (*verify) {
      GroupDescriptor g = group_arg(group);
      try {
        vopt.suite = parse_suite(suite);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      auto items = run_verify(g, vopt);
      write_out(out, report_json(items));
      int failed = 0, skip = 0, checks = 0;
      for (const auto& it : items) {
        checks += it.checks;
        if (it.status == Status::Fail) {
          if (!failed) std::cerr << "FAIL " << it.check << ": " << it.witness << "\n";
          ++failed;
        }
        if (it.status == Status::Skipped) ++skip;
      }
      std::cerr << g.name() << ": " << items.size() << " items, " << checks << " checks, " << failed << " failed, " << skip
                << " skipped\n";
      return failed ? 1 : 0;
    }
    if (*scan) {
      GroupDescriptor g = group_arg(group);
      if (line.empty() == grid.empty()) throw UsageError("scan needs exactly one of --line or --grid");
      auto H = std::make_shared<const HeckeAlgebra>(HeckeAlgebra::for_group(g));
      std::vector<std::vector<Rational>> pts;
      try {
        if (!line.empty()) {
          auto d = dir.empty() ? default_direction(*H) : rational_list(dir);
          if (static_cast<int>(d.size()) != H->nvars()) throw UsageError("--dir needs " + std::to_string(H->nvars()) + " entries");
          pts = parse_line(line, d);
        } else {
          pts = read_grid(grid, H->nvars());
        }
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      SymbolicPS sym(H);
      auto rows = unitarity_scan(sym, pts, threads);
      write_out(out, format == "json" ? scan_json(g.name(), rows) : scan_csv(rows));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
