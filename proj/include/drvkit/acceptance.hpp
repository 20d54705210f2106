#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace drvkit {

struct AcceptanceOptions {
  std::uint64_t seed = 7;
  /// Directory holding manifest.json and the golden reports. Unset means
  /// the source-tree default, skipped when it does not exist.
  std::optional<std::string> golden_dir;
  /// Criterion ids to run ("AC1".."AC6", "GOLDEN"); empty runs all.
  std::vector<std::string> only;
};

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  bool skipped = false;
  /// Deterministic summary (counts only, no timings).
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

/// Runs the acceptance catalog in a fixed order. `on_result` is called as
/// each criterion finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  AC2  Maschke counterexample ...", optionally with the runtime.
std::string format_result_line(const CriterionResult& result, bool with_timing);

/// Catalog of groups used by the field-case criterion.
std::vector<std::string> acceptance_group_catalog();

/// The two smallest primes not dividing n.
std::vector<std::uint32_t> coprime_primes(std::size_t n, std::size_t count = 2);

}  // namespace drvkit
