#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace hopflab {

enum class Status { Pass, Fail, Skipped };

const char* to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::vector<long> witness;  // basis indices of a counterexample
  std::string detail;
  double millis = 0;  // time since the previous check of the same report
};

struct CheckReport {
  std::vector<Check> checks;

  bool ok() const;
  const Check* find(const std::string& name) const;
  bool passed(const std::string& name) const;

  Check& add(std::string name, bool pass, std::vector<long> witness = {}, std::string detail = {});
  void skip(std::string name, std::string detail);
  // append other's checks, names prefixed with "<prefix>/"
  void merge(const std::string& prefix, const CheckReport& other);
  std::string text(bool with_timing = false) const;

 private:
  std::chrono::steady_clock::time_point mark_ = std::chrono::steady_clock::now();
  double lap();
};

}  // namespace hopflab
