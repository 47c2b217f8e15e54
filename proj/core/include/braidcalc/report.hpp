#pragma once

// Suite reports: one entry per check, sorted by id, serialized canonically.

#include <string>
#include <vector>

#include "braidcalc/condition.hpp"

namespace braidcalc {

inline constexpr const char* kVersion = "0.1.0";

struct CheckResult {
  std::string id;
  Status status = Status::pass;
  std::string paper_ref;
  std::string witness;
  long runtime_ms = 0;
  // Reported-only checks never count as failures for the exit code.
  bool asserted = true;
};

struct SuiteSummary {
  int pass = 0, fail = 0, inconclusive = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  // Sorts by id; throws Error on a duplicate id.
  void finalize();
  SuiteSummary summary() const;
  // True when no asserted check failed.
  bool ok() const;

  std::string to_json() const;
  std::string to_text() const;
};

SuiteReport parse_report_json(const std::string& text);

}  // namespace braidcalc
