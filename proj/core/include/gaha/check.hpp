#pragma once

#include <string>

namespace gaha {

struct CheckResult {
  bool ok = true;
  int checks = 0;
  std::string failure;
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      failure = what;
    }
  }
  void absorb(const CheckResult& o) {
    checks += o.checks;
    if (!o.ok && ok) {
      ok = false;
      failure = o.failure;
    }
  }
};

}  // namespace gaha
