#include "incat/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace incat {

void Report::merge(const Report& other) {
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
  findings_.insert(findings_.end(), other.findings_.begin(), other.findings_.end());
}

bool Report::passed() const {
  return std::all_of(findings_.begin(), findings_.end(), [](const Finding& f) { return f.pass; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(findings_.begin(), findings_.end(), [](const Finding& f) { return !f.pass; }));
}

std::size_t Report::count(std::string_view check) const {
  return static_cast<std::size_t>(
      std::count_if(findings_.begin(), findings_.end(), [&](const Finding& f) { return f.check == check; }));
}

bool Report::passed(std::string_view check) const {
  return std::none_of(findings_.begin(), findings_.end(),
                      [&](const Finding& f) { return f.check == check && !f.pass; });
}

std::optional<Finding> Report::first_failure(std::string_view check) const {
  for (const auto& f : findings_)
    if (!f.pass && (check.empty() || f.check == check)) return f;
  return std::nullopt;
}

std::vector<CheckSummary> Report::summary() const {
  std::vector<CheckSummary> out;
  std::map<std::string, std::size_t, std::less<>> index;
  for (const auto& f : findings_) {
    auto [it, fresh] = index.try_emplace(f.check, out.size());
    if (fresh) out.push_back({f.check, 0, 0, std::nullopt});
    auto& s = out[it->second];
    ++s.checked;
    if (!f.pass) {
      ++s.failed;
      if (!s.witness) s.witness = f;
    }
  }
  return out;
}

std::string Report::to_text(bool verbose) const {
  std::ostringstream os;
  if (!title_.empty()) os << "== " << title_ << '\n';
  for (const auto& n : notes_) os << "   " << n << '\n';
  for (const auto& s : summary()) {
    os << (s.failed == 0 ? "[PASS] " : "[FAIL] ") << s.check << "  (checked " << s.checked;
    if (s.failed) os << ", failed " << s.failed;
    os << ")\n";
    if (s.witness) {
      os << "       witness: " << s.witness->subject;
      if (!s.witness->detail.empty()) os << "  -- " << s.witness->detail;
      os << '\n';
    }
  }
  if (verbose) {
    for (const auto& f : findings_) {
      os << "   " << (f.pass ? "ok   " : "FAIL ") << f.check << ": " << f.subject;
      if (!f.detail.empty()) os << "  -- " << f.detail;
      os << '\n';
    }
  }
  os << "verdict: " << (passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& s : summary()) {
    nlohmann::json c = {{"check", s.check}, {"checked", s.checked}, {"failed", s.failed}, {"pass", s.failed == 0}};
    if (s.witness) c["witness"] = {{"subject", s.witness->subject}, {"detail", s.witness->detail}};
    checks.push_back(std::move(c));
  }
  nlohmann::json findings = nlohmann::json::array();
  for (const auto& f : findings_)
    findings.push_back({{"check", f.check}, {"subject", f.subject}, {"pass", f.pass}, {"detail", f.detail}});
  return {{"title", title_}, {"notes", notes_}, {"pass", passed()}, {"checks", std::move(checks)},
          {"findings", std::move(findings)}};
}

}  // namespace incat
