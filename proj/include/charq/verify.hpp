#pragma once

// End-to-end consistency harness: brute-force agreement of the
// quasi-polynomial, period divisibility, lattice periodicity and
// coarseness nesting, bundled into one report.

#include "charq/arrangement.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace charq {

struct CheckResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

struct VerifyReport {
  Int q0;
  Int rho0;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const CheckResult& c : checks)
      if (!c.skipped && !c.passed) return false;
    return true;
  }
};

struct VerifyOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
  // Verify this quasi-polynomial instead of the freshly assembled one;
  // lets tests feed a corrupted constituent through the harness.
  std::optional<CharQuasiPolynomial> poly_override;
};

VerifyReport run_verification(const Arrangement& a, std::int64_t q_max,
                              const VerifyOptions& opts = {});

}  // namespace charq
