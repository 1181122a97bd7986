#include <cstdio>

#include "hopflab/suite.hpp"

int main() {
  using namespace hopflab;
  SuiteOptions opt;
  auto results = run_suite(opt, true);
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s  criterion %2d: %s\n", r.ok() ? "PASS" : "FAIL", r.id, r.title.c_str());
    if (!r.ok()) {
      ++failed;
      for (const auto& c : r.report.checks)
        if (c.status == Status::Fail) std::printf("        failed check %s %s\n", c.name.c_str(), c.detail.c_str());
    }
  }
  if (static_cast<int>(results.size()) != kCriteria) {
    std::printf("FAIL  expected %d criteria, got %zu\n", kCriteria, results.size());
    return 1;
  }
  return failed == 0 ? 0 : 1;
}
