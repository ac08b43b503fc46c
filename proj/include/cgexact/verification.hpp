#pragma once

// Runs the identity suites over every (m, n) with 0 <= m <= m_max, 0 <= n <= n_max.

#include "cgexact/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cgexact {

enum Suite : unsigned {
  kSuiteOrthogonality = 1u << 0,
  kSuiteRecurrences = 1u << 1,
  kSuiteRegge = 1u << 2,
  kSuiteNormalized = 1u << 3,
  kSuiteProjectors = 1u << 4,
  kSuiteAll = (1u << 5) - 1,
};

/// Parses "all", "orthogonality", ... Returns 0 for an unknown name.
unsigned suite_from_name(const std::string& name);

struct VerifyOptions {
  long m_max = 0;
  long n_max = 0;
  unsigned suites = kSuiteAll;
  bool fail_fast = false;
  unsigned threads = 0;  // 0 = CG_EXACT_THREADS or hardware concurrency
};

struct VerificationResult {
  std::vector<std::pair<std::string, Report>> suites;  // in fixed suite order

  bool passed() const;
  /// One line per identity family; `quiet` keeps only failures and the summary.
  std::string text(bool quiet = false) const;
};

/// Suites run per (m, n) instance in row-major order. With fail_fast, instances
/// after the first failing one are dropped from the result. A nonempty
/// CG_EXACT_VERIFY_INJECT_FAILURE adds one failing family, for exercising
/// failure handling in callers.
VerificationResult run_verification(const VerifyOptions& options);

}  // namespace cgexact
