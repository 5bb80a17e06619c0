#pragma once

#include <string>
#include <vector>

namespace entroute::verify {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string detail; ///< first failure description, empty when clean
};

struct Report {
  std::vector<SuiteResult> suites;

  bool ok() const {
    for (const SuiteResult& s : suites) {
      if (s.failures != 0) {
        return false;
      }
    }
    return true;
  }
};

/// Runs every law and oracle suite with fixed seeds. Deterministic.
Report run_all();

/// Runs the named suite only; throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name);

std::vector<std::string> suite_names();

std::string format(const Report& report);

} // namespace entroute::verify
