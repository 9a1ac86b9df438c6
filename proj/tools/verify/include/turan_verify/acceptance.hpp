#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace turan::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 16;

/// Criterion numbers run by a named suite: all, counting, lagrangian,
/// bounds, search, rank3, identities, minors, determinism. Throws
/// std::invalid_argument for other names.
std::vector<int> suite_criteria(std::string_view suite);

std::vector<std::string> suite_names();

/// Runs one criterion. Exceptions from the library are caught and reported
/// as a failure carrying the message.
CriterionResult run_criterion(int id);

/// "PASS [ 3] title: detail", with " (1.23s)" after the title when timing is set.
std::string format_result(const CriterionResult& result, bool timing = false);

}  // namespace turan::verify
