#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gaha/rational.hpp"
#include "gaha/roots.hpp"

namespace gaha {

enum class Suite { Relations, Tensor, Oda, All };
// throws std::invalid_argument
Suite parse_suite(const std::string& s);

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct ReportItem {
  std::string check;
  std::string group;
  std::vector<std::pair<std::string, std::string>> parameters;  // printed in this order
  Status status = Status::Pass;
  int checks = 0;
  std::string witness;  // first failure, or why the check was skipped
};

struct VerifyOptions {
  Suite suite = Suite::All;
  int degree = 3;
  int trials = 100;
  // lift the rank guards (k <= 4 modules, k <= 3 tensors, oda on rank one and GL(3))
  bool force = false;
};

// Table-style summary of H(G_R) for the group.
std::string info_text(const GroupDescriptor& g);

// Runs the suite; guarded configurations are reported as skipped.
std::vector<ReportItem> run_verify(const GroupDescriptor& g, const VerifyOptions& opt);
bool all_passed(const std::vector<ReportItem>& items);  // skipped counts as passed

// [{check, group, parameters, status, checks, witness}, ...]
std::string report_json(const std::vector<ReportItem>& items);

// deterministic sample points: rank coordinates, small rationals
std::vector<std::vector<Rational>> sample_nus(int rank, int count, std::uint64_t seed);

}  // namespace gaha
