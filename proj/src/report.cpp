#include "hopflab/report.hpp"

#include <cstdio>
#include <sstream>

namespace hopflab {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "?";
}

bool CheckReport::ok() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return false;
  return true;
}

const Check* CheckReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool CheckReport::passed(const std::string& name) const {
  auto c = find(name);
  return c && c->status == Status::Pass;
}

double CheckReport::lap() {
  auto now = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(now - mark_).count();
  mark_ = now;
  return ms;
}

Check& CheckReport::add(std::string name, bool pass, std::vector<long> witness, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.status = pass ? Status::Pass : Status::Fail;
  if (!pass) c.witness = std::move(witness);
  c.detail = std::move(detail);
  c.millis = lap();
  checks.push_back(std::move(c));
  return checks.back();
}

void CheckReport::skip(std::string name, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.status = Status::Skipped;
  c.detail = std::move(detail);
  checks.push_back(std::move(c));
}

void CheckReport::merge(const std::string& prefix, const CheckReport& other) {
  for (auto c : other.checks) {
    if (!prefix.empty()) c.name = prefix + "/" + c.name;
    checks.push_back(std::move(c));
  }
  lap();
}

std::string CheckReport::text(bool with_timing) const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "SKIP") << "  " << c.name;
    if (!c.witness.empty()) {
      os << "  witness=(";
      for (std::size_t i = 0; i < c.witness.size(); ++i) os << (i ? "," : "") << c.witness[i];
      os << ")";
    }
    if (!c.detail.empty()) os << "  " << c.detail;
    if (with_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "  [%.1f ms]", c.millis);
      os << buf;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace hopflab
