#include "incat/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "incat/error.hpp"

namespace incat {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

FiniteMonoid::FiniteMonoid(Table table, Elem unit, std::vector<std::string> names)
    : table_(std::move(table)), unit_(unit), names_(std::move(names)) {
  const int n = size();
  if (n == 0) throw InvariantViolation("monoid must be nonempty");
  if (names_.empty()) names_ = default_names(table_.size());
  if (static_cast<int>(names_.size()) != n) throw InvariantViolation("monoid name list has wrong length");
  if (unit_ < 0 || unit_ >= n) throw InvariantViolation("monoid unit out of range");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw InvariantViolation("monoid table is not square");
    for (Elem x : row)
      if (x < 0 || x >= n) throw InvariantViolation("monoid table entry out of range");
  }
  for (Elem a = 0; a < n; ++a) {
    if (mul(unit_, a) != a || mul(a, unit_) != a)
      throw InvariantViolation("unit law fails at " + names_[a]);
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw InvariantViolation("associativity fails at (" + names_[a] + ", " + names_[b] + ", " + names_[c] + ")");
  }
}

std::optional<FiniteMonoid::Elem> FiniteMonoid::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Elem>(it - names_.begin());
}

std::optional<FiniteMonoid::Elem> FiniteMonoid::inverse(Elem a) const {
  for (Elem b = 0; b < size(); ++b)
    if (mul(a, b) == unit_ && mul(b, a) == unit_) return b;
  return std::nullopt;
}

bool FiniteMonoid::is_group() const {
  for (Elem a = 0; a < size(); ++a)
    if (!inverse(a)) return false;
  return true;
}

bool FiniteMonoid::is_central(Elem z) const {
  for (Elem a = 0; a < size(); ++a)
    if (mul(z, a) != mul(a, z)) return false;
  return true;
}

FiniteMonoid FiniteMonoid::cyclic(int n) {
  Table t(n, std::vector<Elem>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteMonoid(std::move(t), 0);
}

FiniteMonoid FiniteMonoid::max_chain(int n) {
  Table t(n, std::vector<Elem>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = std::max(a, b);
  return FiniteMonoid(std::move(t), 0);
}

FiniteGroup::FiniteGroup(Table table, Elem unit, std::vector<std::string> names)
    : FiniteMonoid(std::move(table), unit, std::move(names)) {
  for (Elem a = 0; a < size(); ++a) {
    auto i = inverse(a);
    if (!i) throw InvariantViolation("element " + name(a) + " has no inverse");
    inverses_.push_back(*i);
  }
}

bool FiniteGroup::is_subgroup(const std::vector<Elem>& s) const {
  if (std::find(s.begin(), s.end(), unit_) == s.end()) return false;
  for (Elem a : s)
    for (Elem b : s)
      if (std::find(s.begin(), s.end(), mul(a, inv(b))) == s.end()) return false;
  return true;
}

bool FiniteGroup::is_normal(const std::vector<Elem>& s) const {
  if (!is_subgroup(s)) return false;
  for (Elem g = 0; g < size(); ++g)
    for (Elem h : s)
      if (std::find(s.begin(), s.end(), conj(g, h)) == s.end()) return false;
  return true;
}

std::vector<FiniteMonoid::Elem> FiniteGroup::center() const {
  std::vector<Elem> out;
  for (Elem z = 0; z < size(); ++z)
    if (is_central(z)) out.push_back(z);
  return out;
}

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& generators, int degree) {
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  for (const auto& g : generators) {
    Permutation sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (static_cast<int>(g.size()) != degree || sorted != id) throw InvariantViolation("generator is not a permutation");
  }
  auto compose = [degree](const Permutation& p, const Permutation& q) {
    Permutation r(degree);
    for (int i = 0; i < degree; ++i) r[i] = p[q[i]];
    return r;
  };
  std::vector<Permutation> elems{id};
  std::map<Permutation, int> index{{id, 0}};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : generators) {
      auto next = compose(elems[k], g);
      if (index.try_emplace(next, static_cast<int>(elems.size())).second) elems.push_back(next);
    }
  std::sort(elems.begin(), elems.end());
  index.clear();
  for (std::size_t k = 0; k < elems.size(); ++k) index[elems[k]] = static_cast<int>(k);
  const int n = static_cast<int>(elems.size());
  Table t(n, std::vector<Elem>(n));
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back(cycle_notation(elems[a]));
    for (int b = 0; b < n; ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  }
  FiniteGroup g(std::move(t), index.at(id), std::move(names));
  g.perms_ = std::move(elems);
  return g;
}

FiniteGroup FiniteGroup::symmetric(int degree) {
  std::vector<Permutation> gens;
  for (int i = 0; i + 1 < degree; ++i) {
    Permutation p(degree);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[i], p[i + 1]);
    gens.push_back(p);
  }
  return from_permutations(gens, degree);
}

FiniteGroup FiniteGroup::alternating(int degree) {
  std::vector<Permutation> gens;
  for (int i = 0; i + 2 < degree; ++i) {
    Permutation p(degree);
    std::iota(p.begin(), p.end(), 0);
    p[i] = i + 1;
    p[i + 1] = i + 2;
    p[i + 2] = i;
    gens.push_back(p);
  }
  return from_permutations(gens, degree);
}

FiniteGroup subgroup(const FiniteGroup& g, const std::vector<FiniteMonoid::Elem>& elements) {
  if (!g.is_subgroup(elements)) throw InvariantViolation("element list is not a subgroup");
  std::map<FiniteMonoid::Elem, int> pos;
  for (std::size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elements.size());
  FiniteMonoid::Table t(n, std::vector<FiniteMonoid::Elem>(n));
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back(g.name(elements[a]));
    for (int b = 0; b < n; ++b) t[a][b] = pos.at(g.mul(elements[a], elements[b]));
  }
  return FiniteGroup(std::move(t), pos.at(g.unit()), std::move(names));
}

std::vector<std::vector<FiniteMonoid::Elem>> automorphisms(const FiniteGroup& g) {
  const int n = g.size();
  std::vector<std::vector<FiniteMonoid::Elem>> out;
  std::vector<FiniteMonoid::Elem> image(n, -1);
  std::vector<bool> used(n, false);
  image[g.unit()] = g.unit();
  used[g.unit()] = true;
  // Backtracking over images; partial homomorphism checks prune early.
  auto consistent = [&](int upto) {
    for (int a = 0; a <= upto; ++a)
      for (int b = 0; b <= upto; ++b) {
        if (image[a] < 0 || image[b] < 0) continue;
        int ab = g.mul(a, b);
        if (image[ab] >= 0 && image[ab] != g.mul(image[a], image[b])) return false;
      }
    return true;
  };
  auto rec = [&](auto& self, int a) -> void {
    if (a == n) {
      out.push_back(image);
      return;
    }
    if (a == g.unit()) {
      self(self, a + 1);
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (used[x]) continue;
      image[a] = x;
      used[x] = true;
      if (consistent(a)) self(self, a + 1);
      used[x] = false;
      image[a] = -1;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace incat
