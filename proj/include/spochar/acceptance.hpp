#pragma once

// The reproduction checks: one result per acceptance criterion, shared by
// the acceptance test binary and `spochar reproduce-paper`.

#include <string>
#include <vector>

namespace spochar {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  // failed, but only on entries whose printed value is analysed as a
  // misprint; the computed value is checked separately
  bool known_discrepancy = false;
  std::size_t known_failures = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

inline constexpr int kCriteria = 11;

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

// every criterion passed or is a known discrepancy
bool acceptance_ok(const std::vector<CriterionResult> &results);

// "criterion 1: PASS  Euler character goldens (5 checks)"
std::string format_line(const CriterionResult &r);

} // namespace spochar
