// Acceptance runner: executes every verification suite at its pinned
// tolerances and prints one pass/fail line per criterion.
// Usage: qpw_acceptance [path-to-cli-binary]

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "qpw/verify.hpp"

int main(int argc, char** argv) {
  qpw::VerifyOptions opts;
  if (argc > 1) opts.cli_path = argv[1];

  const std::vector<std::pair<std::string, std::string>> criteria = {
      {"algebra", "multiplication table, norm multiplicativity, associativity"},
      {"entire", "exp/sin/sinc against the 60-term series, conjugation symmetry"},
      {"structure", "representation formula, decomposition, one-slice extension"},
      {"qft", "round trip, plancherel, spectrum symmetries, unit transfer"},
      {"pw-compact", "growth bound, spectral support, slice regularity"},
      {"hardy", "three-way identity, kernels, essential transform, membership"},
      {"kernel", "sinc reproducing integral, half-space reproducing kernel"},
      {"sampling", "interpolation, series consistency, parseval, strip bound"},
      {"cli", "file round trip, exit codes, deterministic reruns"},
  };

  int failures = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    const auto& [suite, what] = criteria[n];
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
      const qpw::SuiteReport report = qpw::run_suite(suite, opts);
      pass = report.all_pass();
      double worst_margin = 1e300;
      std::string worst_name;
      for (const auto& c : report.checks) {
        const double margin = c.tolerance - c.max_error;
        if (!c.pass)
          detail += "\n      FAIL " + c.name + ": max_error " + std::to_string(c.max_error) +
                    " > tolerance " + std::to_string(c.tolerance);
        if (margin < worst_margin) {
          worst_margin = margin;
          worst_name = c.name;
        }
      }
      if (pass && !worst_name.empty()) {
        char buf[160];
        std::snprintf(buf, sizeof buf, " (tightest: %s)", worst_name.c_str());
        detail = buf;
      }
    } catch (const std::exception& e) {
      detail = std::string("\n      ERROR ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%zu/9] %-10s %-4s %6.1fs  %s%s\n", n + 1, suite.c_str(),
                pass ? "PASS" : "FAIL", secs, what.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  return failures;
}
