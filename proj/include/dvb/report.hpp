#ifndef DVB_REPORT_HPP
#define DVB_REPORT_HPP

#include <string>
#include <vector>

namespace dvb {

/// One named verification check. `detail` carries a counterexample or a short
/// informational note; empty when there is nothing to say.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckResult> checks;

  void add(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  bool passed(const std::string& name) const {
    const CheckResult* c = find(name);
    return c && c->pass;
  }
};

} // namespace dvb

#endif
