#include "incat/skew.hpp"

#include <algorithm>

#include "incat/error.hpp"

namespace incat {

bool is_path(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

PathStats path_stats(const LatticePath& p) {
  int h = static_cast<int>(std::count(p.begin(), p.end(), '1'));
  return {h, static_cast<int>(p.size()) - h};
}

Dominance dominates(const LatticePath& q, const LatticePath& p) {
  if (!is_path(q) || !is_path(p)) throw PreconditionViolation("not a 0/1 word");
  if (!(path_stats(q) == path_stats(p))) throw PreconditionViolation("paths " + q + " and " + p + " differ in height or width");
  int sq = 0, sp = 0;
  bool strict = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sq += q[i] == '1';
    sp += p[i] == '1';
    if (sp < sq) return Dominance::NotComparable;
    if (i + 1 < p.size() && sp == sq) strict = false;
  }
  return strict && q != p ? Dominance::Lt : Dominance::Leq;
}

std::vector<LatticePath> paths_with(int height, int width) {
  std::vector<LatticePath> out;
  LatticePath p(static_cast<std::size_t>(width), '0');
  p += std::string(static_cast<std::size_t>(height), '1');
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

SkewCategory::Mor SkewCategory::make(const LatticePath& lower, const LatticePath& upper) const {
  if (dominates(lower, upper) == Dominance::NotComparable)
    throw PreconditionViolation(upper + " does not dominate " + lower);
  return {lower, upper};
}

SkewCategory::Mor SkewCategory::compose(const Mor& a, const Mor& b) const {
  if (a.lower != b.upper) throw NotComposable(render(a), render(b));
  return {b.lower, a.upper};
}

std::vector<std::pair<SkewCategory::Mor, SkewCategory::Mor>> SkewCategory::n2(const Mor& f) const {
  auto stats = path_stats(f.upper);
  std::vector<std::pair<Mor, Mor>> out;
  for (const auto& q : paths_with(stats.height, stats.width))
    if (dominates(f.lower, q) != Dominance::NotComparable && dominates(q, f.upper) != Dominance::NotComparable)
      out.push_back({{q, f.upper}, {f.lower, q}});
  std::sort(out.begin(), out.end());
  return out;
}

SkewCategory::Mor SkewCategory::parse(const std::string& text) const {
  const std::string head = "skew(";
  if (text.compare(0, head.size(), head) != 0) throw ParseError("expected 'skew('", 0);
  std::size_t pos = head.size();
  auto word = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && (text[pos] == '0' || text[pos] == '1')) ++pos;
    return text.substr(start, pos - start);
  };
  auto lower = word();
  if (pos >= text.size() || text[pos] != ',') throw ParseError("expected ','", pos);
  ++pos;
  auto upper = word();
  if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
  if (pos + 1 != text.size()) throw ParseError("trailing characters", pos + 1);
  if (lower.size() != upper.size() || !(path_stats(lower) == path_stats(upper)))
    throw ParseError("paths differ in height or width", head.size());
  if (dominates(lower, upper) == Dominance::NotComparable) throw ParseError("upper path does not dominate lower path", head.size());
  return {lower, upper};
}

std::vector<SkewCategory::Mor> SkewCategory::connected_factorization(const Mor& f) const {
  std::vector<Mor> out;
  std::size_t start = 0;
  int sq = 0, sp = 0;
  for (std::size_t i = 0; i < f.upper.size(); ++i) {
    sq += f.lower[i] == '1';
    sp += f.upper[i] == '1';
    if (sq == sp) {
      out.push_back({f.lower.substr(start, i + 1 - start), f.upper.substr(start, i + 1 - start)});
      start = i + 1;
    }
  }
  return out;
}

std::vector<SkewCategory::Mor> SkewCategory::shapes_up_to(int n) const {
  std::vector<Mor> out;
  for (int len = 0; len <= n; ++len)
    for (int h = 0; h <= len; ++h) {
      auto ps = paths_with(h, len - h);
      for (const auto& q : ps)
        for (const auto& p : ps)
          if (dominates(q, p) != Dominance::NotComparable) out.push_back({q, p});
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace incat
