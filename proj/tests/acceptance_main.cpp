#include <cstdlib>
#include <iostream>
#include <string>

#include "drvkit/acceptance.hpp"

// Usage: acceptance_tests [criterion ...]
int main(int argc, char** argv) {
  drvkit::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) options.only.emplace_back(argv[i]);
  if (const char* seed = std::getenv("DRVKIT_SEED")) options.seed = std::strtoull(seed, nullptr, 10);

  bool all = true;
  drvkit::run_acceptance(options, [&](const drvkit::CriterionResult& r) {
    std::cout << drvkit::format_result_line(r, true) << std::endl;
    all = all && r.passed;
  });
  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
  return all ? 0 : 1;
}
