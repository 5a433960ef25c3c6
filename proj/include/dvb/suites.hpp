#ifndef DVB_SUITES_HPP
#define DVB_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dvb/dims.hpp"

namespace dvb {

struct PropertyResult {
  std::string name;
  bool pass = true;
  std::string counterexample; // nonempty exactly when pass is false
};

/// Deterministic outcome of one property suite: identical (suite, fixture,
/// trials, seed) reproduce identical properties byte for byte; only
/// wall_time_ms varies between runs.
struct SuiteReport {
  std::string suite;
  std::string fixture;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties; // sorted by name
  double wall_time_ms = 0.0;

  bool all_pass() const {
    for (const auto& p : properties)
      if (!p.pass) return false;
    return true;
  }
};

struct SuiteConfig {
  std::string suite;
  Dims dims{2, 2, 2};
  std::uint64_t trials = 200;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::optional<nlohmann::json> fixture; // file-provided fixture (bundles)
  std::string fixture_name;              // report identity; defaulted per suite
};

std::vector<std::string> suite_names();

/// Runs one named property suite; unknown names and malformed fixtures throw
/// Error(InputError).
SuiteReport run_suite(const SuiteConfig& config);

nlohmann::json suite_report_json(const SuiteReport& report);

} // namespace dvb

#endif
