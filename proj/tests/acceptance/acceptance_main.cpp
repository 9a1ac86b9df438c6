// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
#include <iostream>

#include "turan_verify/acceptance.hpp"

int main() {
  int failures = 0;
  for (int id = 1; id <= turan::verify::kCriterionCount; ++id) {
    const turan::verify::CriterionResult result = turan::verify::run_criterion(id);
    std::cout << turan::verify::format_result(result, true) << '\n' << std::flush;
    if (!result.passed) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
