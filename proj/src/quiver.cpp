#include "incat/quiver.hpp"

#include <algorithm>
#include <cctype>

#include "incat/error.hpp"

namespace incat {

QuiverCategory::QuiverCategory(FiniteGroup q0, std::optional<Obj> z) : q0_(std::move(q0)), z_(z) {
  if (z_) {
    if (*z_ < 0 || *z_ >= q0_.size()) throw InvariantViolation("central element out of range");
    if (!q0_.is_central(*z_)) throw InvariantViolation("element " + q0_.name(*z_) + " is not central");
  }
}

QuiverCategory::Obj QuiverCategory::power_times(int n, Obj a) const {
  for (int i = 0; i < n; ++i) a = q0_.mul(*z_, a);
  return a;
}

QuiverCategory::Mor QuiverCategory::compose(const Mor& a, const Mor& b) const {
  if (a.base != target(b)) throw NotComposable(render(a), render(b));
  return {b.base, a.steps + b.steps};
}

std::vector<std::pair<QuiverCategory::Mor, QuiverCategory::Mor>> QuiverCategory::n2(const Mor& f) const {
  std::vector<std::pair<Mor, Mor>> out;
  for (int k = 0; k <= f.steps; ++k) out.push_back({{power_times(k, f.base), f.steps - k}, {f.base, k}});
  std::sort(out.begin(), out.end());
  return out;
}

std::string QuiverCategory::render(const Mor& f) const {
  return "(" + q0_.name(f.base) + "," + std::to_string(f.steps) + ")";
}

QuiverCategory::Mor QuiverCategory::arrow(Obj a) const {
  if (!z_) throw PreconditionViolation("quiver has no arrows");
  return {a, 1};
}

QuiverCategory::Mor QuiverCategory::make(Obj a, int steps) const {
  if (a < 0 || a >= q0_.size() || steps < 0 || (!z_ && steps > 0)) throw PreconditionViolation("no such path");
  return {a, steps};
}

QuiverCategory::Mor QuiverCategory::parse(const std::string& text) const {
  auto comma = text.rfind(',');
  if (text.size() < 5 || text.front() != '(' || text.back() != ')' || comma == std::string::npos)
    throw ParseError("expected (vertex,steps)", 0);
  auto a = q0_.find(text.substr(1, comma - 1));
  if (!a) throw ParseError("unknown vertex", 1);
  std::string digits = text.substr(comma + 1, text.size() - comma - 2);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("expected step count", comma + 1);
  int steps = std::stoi(digits);
  if (!z_ && steps > 0) throw ParseError("quiver has no arrows", comma + 1);
  return {*a, steps};
}

std::vector<QuiverCategory::Mor> QuiverCategory::paths_up_to(int max_steps) const {
  std::vector<Mor> out;
  for (Obj a = 0; a < q0_.size(); ++a)
    for (int n = 0; n <= (z_ ? max_steps : 0); ++n) out.push_back({a, n});
  std::sort(out.begin(), out.end());
  return out;
}

LiftReport quiver_ulf_failure(const QuiverCategory& q) {
  auto f = q.arrow(q.vertices().unit());
  return check_nlf(q, f, f);
}

Report check_length_grading(const QuiverCategory& q, const std::vector<QuiverCategory::Mor>& fragment) {
  Report report(q.name() + ": length grading");
  N2Cache<QuiverCategory> n2(q);
  LengthOracle<QuiverCategory> len(n2);
  for (const auto& f : fragment) {
    Length lf = len(f);
    report.add("length equals steps", q.render(f), !lf.infinite && lf.value == static_cast<std::size_t>(f.steps),
               "length " + lf.to_string());
    for (const auto& g : fragment) {
      Length lp = len(q.product(f, g));
      report.add("product length additive", q.render(f) + " · " + q.render(g), lp == lf + len(g));
      if (q.source(f) == q.target(g)) report.add("composite length additive", q.render(f) + " ∘ " + q.render(g),
                                                 len(q.compose(f, g)) == lf + len(g));
    }
  }
  return report;
}

}  // namespace incat
