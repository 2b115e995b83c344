#pragma once

#include <json.hpp>

#include "symqcs/projtop.hpp"

namespace symqcs {

struct CheckLine {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int index = 0;
  std::string title;
  double budget_seconds = 0;
  double seconds = 0;
  std::vector<CheckLine> checks;

  bool checks_pass() const;
  bool passed() const { return checks_pass() && seconds < budget_seconds; }
};

/// Runs one acceptance criterion (1..8). All tolerances are zero; every check
/// is an exact equality or an exact rank statement over ℚ.
CriterionResult run_criterion(int k, std::uint64_t seed = 2026);

nlohmann::json criterion_to_json(const CriterionResult& r);

/// One human-readable line per check plus the summary line, to the stream.
void print_criterion(const CriterionResult& r, std::ostream& os);

}  // namespace symqcs
