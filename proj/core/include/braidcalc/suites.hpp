#pragma once

// Named verification suites. Each check carries the verdict the theory
// asserts; a check passes when the computed verdict matches it.

#include <string>
#include <vector>

#include "braidcalc/report.hpp"

namespace braidcalc {

struct SuiteOptions {
  bool timing = false;
  int threads = 1;
};

// gl, u2, braided, witt, families, weyl2d, all
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Throws Error on an unknown suite. Results do not depend on threads.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

// BRAIDCALC_THREADS, clamped to [1, 64]; 1 when unset or malformed.
int threads_from_env();

}  // namespace braidcalc
