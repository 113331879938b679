#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace arbor {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> failures;  // first few messages only
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  std::size_t cases_passed = 0;
  std::size_t cases_total = 0;

  bool ok() const noexcept { return cases_passed == cases_total; }
};

/// Runs `cases` randomized cases, each exercising every sum-preservation
/// property (moves, merges, root splits, matrix-tree equivalence, both
/// factoring strategies) on freshly drawn inputs. Deterministic in `seed`.
VerifyReport run_verification(std::uint64_t seed, std::size_t cases);

/// Fixed-width summary table followed by "<passed>/<total> passed".
std::string format_report(const VerifyReport& report);

}  // namespace arbor
