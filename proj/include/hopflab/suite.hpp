#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopflab/io.hpp"

namespace hopflab {

struct SuiteOptions {
  Field field = Field::rationals();
  std::vector<long> t_values{-2, -1, 0, 1, 2, 3};
  std::uint64_t seed = 0;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  CheckReport report;
  double millis = 0;

  bool ok() const { return report.ok() && !report.checks.empty(); }
};

inline constexpr int kCriteria = 15;

// Criterion 15 (determinism) needs two full runs and lives in the callers.
CriterionResult run_criterion(int id, const SuiteOptions& opt);
std::vector<CriterionResult> run_suite(const SuiteOptions& opt, bool include_determinism = false);

json suite_to_json(const std::vector<CriterionResult>& results, const SuiteOptions& opt);
std::string suite_text(const std::vector<CriterionResult>& results, const SuiteOptions& opt);

}  // namespace hopflab
