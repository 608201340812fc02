// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Budgets are wall-clock seconds; a check that succeeds over budget fails.

#include <iostream>

#include "hyperpoly/repro.hpp"

int main() {
  int failed = 0;
  for (const auto& c : hyperpoly::acceptance_criteria()) {
    const auto r = hyperpoly::run_criterion(c);
    std::cout << hyperpoly::format_result(r) << std::endl;
    failed += !r.passed;
  }
  std::cout << (failed ? "FAILED: " + std::to_string(failed) + " criteria" : std::string("all criteria passed"))
            << std::endl;
  return failed ? 1 : 0;
}
