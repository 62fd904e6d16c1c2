#include "qbundle/report.hpp"

#include <algorithm>

namespace qb {

CheckResult& Report::add(std::string name, bool pass, std::string detail) {
  checks_.push_back({std::move(name), pass, std::move(detail), {}});
  return checks_.back();
}

CheckResult& Report::add_sweep(std::string name, std::vector<std::string> failures, std::size_t swept,
                               const std::string& unit) {
  const bool pass = failures.empty();
  std::string detail = std::to_string(swept) + " " + unit;
  if (!pass) {
    detail += ", " + std::to_string(failures.size()) + " failing; first: " + failures.front();
  }
  auto& c = add(std::move(name), pass, std::move(detail));
  c.failures = std::move(failures);
  return c;
}

void Report::append(const Report& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
}

bool Report::ok() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::passed(const std::string& name) const {
  const CheckResult* c = find(name);
  return c && c->pass;
}

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks_)
    if (!c.pass) return &c;
  return nullptr;
}

std::string Report::to_lines() const {
  std::string out;
  for (const auto& c : checks_) {
    out += "CHECK " + c.name + (c.pass ? " PASS" : " FAIL");
    if (!c.detail.empty()) out += " " + c.detail;
    out += "\n";
  }
  return out;
}

}  // namespace qb
