#pragma once
// Named verification suites over the whole library.  Each suite bundles the
// checks for one headline property; results carry deterministic detail
// strings (counts and first failure only, no timings) so repeated runs are
// byte-identical.

#include <string>
#include <vector>

#include "phinary/sweeps.hpp"

namespace phinary {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Canonical suite order.
const std::vector<std::string>& suite_names();

// Runs one suite.  Throws DomainError for an unknown name.
SuiteResult run_suite(const std::string& name, SweepMode mode);

// Runs the given suites in canonical order; empty selection means all.
// With fail_fast, stops after the first failing suite.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    SweepMode mode, bool fail_fast);

}  // namespace phinary
