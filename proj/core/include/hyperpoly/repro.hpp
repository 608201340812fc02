#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hyperpoly {

/// One reproducible claim: a named check with a wall-clock budget.
struct Criterion {
  int id = 0;
  std::string title;
  double budget_seconds = 1.0;
  /// Returns true on success; writes a one-line summary to `detail`.
  std::function<bool(std::string& detail)> check;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;   ///< check succeeded within budget
  bool checked = false;  ///< check succeeded, budget aside
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;
};

/// The acceptance suite, in order.
const std::vector<Criterion>& acceptance_criteria();

/// Runs one criterion; exceptions become failures with the message as detail.
CriterionResult run_criterion(const Criterion& c);

/// "PASS  3  Tropical evaluation  (0.01s / 1s)  detail"
std::string format_result(const CriterionResult& r);

}  // namespace hyperpoly
