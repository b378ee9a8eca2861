#include "incat/relmonoid.hpp"

#include <algorithm>

#include "incat/error.hpp"

namespace incat {

Relation Relation::equality(int n) {
  Relation r;
  r.n_ = n;
  for (Elem x = 0; x < n; ++x) r.pairs_.insert({x, x});
  return r;
}

Relation Relation::full(int n) {
  Relation r;
  r.n_ = n;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) r.pairs_.insert({x, y});
  return r;
}

Relation Relation::closure(int n, const std::vector<std::pair<Elem, Elem>>& pairs) {
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (Elem x = 0; x < n; ++x) rel[x][x] = true;
  for (auto [x, y] : pairs) {
    if (x < 0 || y < 0 || x >= n || y >= n) throw InvariantViolation("relation pair out of range");
    rel[x][y] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
  Relation r;
  r.n_ = n;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (rel[x][y]) r.pairs_.insert({x, y});
  return r;
}

Relation Relation::literal(int n, std::vector<std::pair<Elem, Elem>> pairs) {
  Relation r;
  r.n_ = n;
  r.pairs_.insert(pairs.begin(), pairs.end());
  return r;
}

RelMonoidCategory::RelMonoidCategory(FiniteMonoid monoid, Relation relation, std::string label)
    : m_(std::move(monoid)), r_(std::move(relation)), label_(std::move(label)) {
  const int n = m_.size();
  if (r_.size() != n) throw InvariantViolation("relation size differs from monoid size");
  for (auto [x, y] : r_.pairs())
    if (x < 0 || y < 0 || x >= n || y >= n) throw InvariantViolation("relation pair out of range");
  for (Obj x = 0; x < n; ++x)
    if (!r_.related(x, x)) throw InvariantViolation("relation not reflexive at " + m_.name(x));
  for (auto [x, y] : r_.pairs())
    for (Obj z = 0; z < n; ++z)
      if (r_.related(y, z) && !r_.related(x, z))
        throw InvariantViolation("relation not transitive at (" + m_.name(x) + ", " + m_.name(y) + ", " + m_.name(z) + ")");
  for (auto [x, y] : r_.pairs())
    for (auto [z, t] : r_.pairs())
      if (!r_.related(m_.mul(x, z), m_.mul(y, t)))
        throw InvariantViolation("relation not compatible with product at (" + m_.name(x) + ", " + m_.name(y) + ", " +
                                 m_.name(z) + ", " + m_.name(t) + ")");
}

RelMonoidCategory::Mor RelMonoidCategory::compose(const Mor& a, const Mor& b) const {
  if (a.upper != b.lower) throw NotComposable(render(a), render(b));
  return {a.lower, b.upper};
}

std::vector<std::pair<RelMonoidCategory::Mor, RelMonoidCategory::Mor>> RelMonoidCategory::n2(const Mor& f) const {
  std::vector<std::pair<Mor, Mor>> out;
  for (Obj z : interval(f.lower, f.upper)) out.push_back({{f.lower, z}, {z, f.upper}});
  std::sort(out.begin(), out.end());
  return out;
}

std::string RelMonoidCategory::render(const Mor& f) const {
  return "(" + m_.name(f.lower) + "," + m_.name(f.upper) + ")";
}

std::vector<RelMonoidCategory::Obj> RelMonoidCategory::interval(Obj x, Obj y) const {
  if (!r_.related(x, y)) throw PreconditionViolation(m_.name(x) + " is not related to " + m_.name(y));
  std::vector<Obj> out;
  for (Obj z = 0; z < m_.size(); ++z)
    if (r_.related(x, z) && r_.related(z, y)) out.push_back(z);
  return out;
}

bool RelMonoidCategory::is_equivalence() const {
  for (auto [x, y] : r_.pairs())
    if (!r_.related(y, x)) return false;
  return true;
}

RelMonoidCategory::Mor RelMonoidCategory::make(Obj lower, Obj upper) const {
  if (lower < 0 || upper < 0 || lower >= m_.size() || upper >= m_.size() || !r_.related(lower, upper))
    throw PreconditionViolation("no morphism (" + std::to_string(lower) + "," + std::to_string(upper) + ")");
  return {lower, upper};
}

std::optional<RelMonoidCategory::Mor> RelMonoidCategory::parse(const std::string& text) const {
  if (text.size() < 5 || text.front() != '(' || text.back() != ')') return std::nullopt;
  auto comma = text.find(',');
  if (comma == std::string::npos) return std::nullopt;
  auto a = m_.find(text.substr(1, comma - 1));
  auto b = m_.find(text.substr(comma + 1, text.size() - comma - 2));
  if (!a || !b || !r_.related(*a, *b)) return std::nullopt;
  return Mor{*a, *b};
}

std::vector<RelMonoidCategory::Obj> RelMonoidCategory::objects() const {
  std::vector<Obj> out;
  for (Obj x = 0; x < m_.size(); ++x) out.push_back(x);
  return out;
}

std::vector<RelMonoidCategory::Mor> RelMonoidCategory::morphisms() const {
  std::vector<Mor> out;
  for (auto [x, y] : r_.pairs()) out.push_back({x, y});
  return out;
}

// ---------------------------------------------------------------------------

FreeMonoidCategory::FreeMonoidCategory(std::string alphabet, Kind kind) : alphabet_(std::move(alphabet)), kind_(kind) {
  std::string sorted = alphabet_;
  std::sort(sorted.begin(), sorted.end());
  if (alphabet_.empty() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      sorted.find('1') != std::string::npos)
    throw InvariantViolation("alphabet must be nonempty, duplicate-free and must not contain '1'");
  alphabet_ = sorted;
}

bool FreeMonoidCategory::related(const Obj& x, const Obj& y) const {
  return kind_ == Kind::EqualLength ? x.size() == y.size() : x == y;
}

FreeMonoidCategory::Mor FreeMonoidCategory::compose(const Mor& a, const Mor& b) const {
  if (a.upper != b.lower) throw NotComposable(render(a), render(b));
  return {a.lower, b.upper};
}

std::vector<FreeMonoidCategory::Obj> FreeMonoidCategory::interval(const Obj& x, const Obj& y) const {
  if (!related(x, y)) throw PreconditionViolation("words " + x + " and " + y + " are not related");
  if (kind_ == Kind::Equality) return {x};
  return words(x.size());
}

std::vector<std::pair<FreeMonoidCategory::Mor, FreeMonoidCategory::Mor>> FreeMonoidCategory::n2(const Mor& f) const {
  std::vector<std::pair<Mor, Mor>> out;
  for (const auto& z : interval(f.lower, f.upper)) out.push_back({{f.lower, z}, {z, f.upper}});
  std::sort(out.begin(), out.end());
  return out;
}

std::string FreeMonoidCategory::render(const Mor& f) const {
  auto word = [](const std::string& w) { return w.empty() ? std::string("1") : w; };
  return "(" + word(f.lower) + "," + word(f.upper) + ")";
}

FreeMonoidCategory::Mor FreeMonoidCategory::make(const Obj& lower, const Obj& upper) const {
  for (char ch : lower + upper)
    if (alphabet_.find(ch) == std::string::npos) throw PreconditionViolation(std::string("letter ") + ch + " not in alphabet");
  if (!related(lower, upper)) throw PreconditionViolation("words " + lower + " and " + upper + " are not related");
  return {lower, upper};
}

FreeMonoidCategory::Mor FreeMonoidCategory::parse(const std::string& text) const {
  std::size_t pos = 0;
  auto expect = [&](char ch) {
    if (pos >= text.size() || text[pos] != ch) throw ParseError(std::string("expected '") + ch + "'", pos);
    ++pos;
  };
  auto word = [&]() {
    std::string w;
    if (pos < text.size() && text[pos] == '1') {
      ++pos;
      return w;
    }
    while (pos < text.size() && alphabet_.find(text[pos]) != std::string::npos) w += text[pos++];
    return w;
  };
  expect('(');
  std::string lower = word();
  expect(',');
  std::string upper = word();
  expect(')');
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  if (!related(lower, upper)) throw ParseError("words are not related", 0);
  return {lower, upper};
}

std::vector<FreeMonoidCategory::Obj> FreeMonoidCategory::words(std::size_t length) const {
  std::vector<Obj> out{""};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<Obj> next;
    for (const auto& w : out)
      for (char ch : alphabet_) next.push_back(w + ch);
    out = std::move(next);
  }
  return out;
}

std::vector<FreeMonoidCategory::Obj> FreeMonoidCategory::words_up_to(std::size_t max_length) const {
  std::vector<Obj> out;
  for (std::size_t n = 0; n <= max_length; ++n) {
    auto w = words(n);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

std::vector<FreeMonoidCategory::Mor> FreeMonoidCategory::morphisms_up_to(std::size_t max_length) const {
  std::vector<Mor> out;
  for (std::size_t n = 0; n <= max_length; ++n) {
    auto ws = words(n);
    for (const auto& a : ws)
      for (const auto& b : ws)
        if (related(a, b)) out.push_back({a, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace incat
