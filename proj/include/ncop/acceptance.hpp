#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ncop {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  long checks = 0;     // individual comparisons made
  std::string detail;  // summary on success, first failure otherwise
  double seconds = 0;
};

struct AcceptanceOptions {
  bool thorough = false;  // larger samples and ranges beyond the thresholds
  std::uint64_t seed = 20240917;
  std::vector<int> only;  // empty: all criteria
};

int criterion_count();
std::string criterion_title(int id);
CriterionResult run_criterion(int id, const AcceptanceOptions& opt);
// Runs the selected criteria in order; on_result is called as each finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result = {});
std::string format_result(const CriterionResult& r);  // "PASS [3] title (...)"

}  // namespace ncop
