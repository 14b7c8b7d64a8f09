#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

// Named verification suites.  Each suite drives one theorem-level loop of
// the library end to end and reports per-check errors against pinned
// tolerances; a check passes iff max_error <= tolerance.

namespace qpw {

struct CheckResult {
  std::string name;
  double max_error = 0;
  double tolerance = 0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyOptions {
  std::uint64_t seed = 7240011;
  int trunc_k = 200;     // sampling-series truncation order
  std::string cli_path;  // binary exercised by the cli suite
};

/// Suite names in acceptance order: algebra, entire, structure, qft,
/// pw-compact, hardy, kernel, sampling, cli.
std::vector<std::string> suite_names();

/// Runs one named suite; unknown names raise UsageError.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts);

nlohmann::json report_to_json(const SuiteReport& report);

}  // namespace qpw
