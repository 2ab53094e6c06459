#pragma once

// Acceptance checks shared by the acceptance test binary and `selftest`.

#include <cstdint>
#include <string>
#include <vector>

namespace vanishing::oracles {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

CriterionResult check_golden_example();
CriterionResult check_merge_example();
CriterionResult check_spoly_counts();
CriterionResult check_merge_bound(std::uint64_t seed);
/// Criteria 5, 6 and 7 share one corpus of random point sets.
std::vector<CriterionResult> check_corpus(std::uint64_t seed);
CriterionResult check_functional_engine(std::uint64_t seed);
CriterionResult check_matrix_orders();

std::vector<CriterionResult> run_all_checks(std::uint64_t seed);

/// "criterion 3: FAIL  ... (details) [0.01 s]"
std::string format_result(const CriterionResult& r);

}  // namespace vanishing::oracles
