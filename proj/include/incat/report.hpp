#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace incat {

struct Finding {
  std::string check;
  std::string subject;
  bool pass = true;
  std::string detail;
};

struct CheckSummary {
  std::string check;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<Finding> witness;  // first failure
};

/// Ordered record of check verdicts. Checks keep the order in which they were
/// first reported, so rendering is deterministic.
class Report {
 public:
  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }

  void add(Finding f) { findings_.push_back(std::move(f)); }
  void add(std::string check, std::string subject, bool pass, std::string detail = {}) {
    findings_.push_back({std::move(check), std::move(subject), pass, std::move(detail)});
  }
  void note(std::string line) { notes_.push_back(std::move(line)); }
  void merge(const Report& other);

  bool passed() const;
  std::size_t failures() const;
  std::size_t count(std::string_view check) const;
  bool passed(std::string_view check) const;
  std::optional<Finding> first_failure(std::string_view check = {}) const;

  const std::vector<Finding>& findings() const { return findings_; }
  const std::vector<std::string>& notes() const { return notes_; }
  std::vector<CheckSummary> summary() const;

  /// One line per check; with `verbose`, also one line per finding.
  std::string to_text(bool verbose = false) const;
  nlohmann::json to_json() const;

 private:
  std::string title_;
  std::vector<std::string> notes_;
  std::vector<Finding> findings_;
};

}  // namespace incat
