#pragma once

#include <string>
#include <vector>

namespace qb {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  /// Individual failing items (words, entries, clauses), capped by the producer.
  std::vector<std::string> failures;
};

/// Ordered list of named checks. Serializes as `CHECK <name> PASS|FAIL <detail>` lines.
class Report {
 public:
  CheckResult& add(std::string name, bool pass, std::string detail = {});
  /// Adds a check that passes iff `failures` is empty.
  CheckResult& add_sweep(std::string name, std::vector<std::string> failures, std::size_t swept,
                         const std::string& unit = "words");
  void append(const Report& other, const std::string& prefix = {});

  const std::vector<CheckResult>& checks() const { return checks_; }
  bool ok() const;
  const CheckResult* find(const std::string& name) const;
  bool passed(const std::string& name) const;
  const CheckResult* first_failure() const;

  std::string to_lines() const;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace qb
