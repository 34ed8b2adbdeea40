#include <iostream>

#include "spochar/acceptance.hpp"

int main()
{
  auto results = spochar::run_acceptance();
  for (const auto &r : results) {
    std::cout << spochar::format_line(r) << "\n";
    for (const auto &f : r.failures)
      std::cout << "    failed: " << f << "\n";
  }
  bool ok = spochar::acceptance_ok(results);
  std::cout << (ok ? "acceptance: all criteria pass or are documented discrepancies\n" : "acceptance: FAILED\n");
  return ok ? 0 : 1;
}
