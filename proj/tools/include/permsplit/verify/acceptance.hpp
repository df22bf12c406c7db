#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace permsplit::verify {

struct AcceptanceConfig {
  std::uint64_t seed = 1;
  /// Restrict every criterion to this ground-set size; criteria with nothing
  /// to check at that size are skipped.
  std::optional<int> only_n;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = true;
  bool skipped = false;
  std::string summary;             // counts of what was checked
  std::vector<std::string> notes;  // failures and informational lines
};

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config);

/// "criterion 3: PASS  theorem hyperplanes ..." plus indented notes.
std::string format_results(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace permsplit::verify
