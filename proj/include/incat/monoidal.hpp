#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "incat/category.hpp"

namespace incat {

template <class C>
concept Monoidal = Category<C> && requires(const C& c, const typename C::Mor& m, const typename C::Obj& x) {
  { c.unit() } -> std::convertible_to<typename C::Obj>;
  { c.oproduct(x, x) } -> std::convertible_to<typename C::Obj>;
  { c.product(m, m) } -> std::convertible_to<typename C::Mor>;
};

/// Instances whose object monoid may be a group expose `object_inverse`.
template <class C>
concept HasObjectInverse = Monoidal<C> && requires(const C& c, const typename C::Obj& x) {
  { c.object_inverse(x) } -> std::convertible_to<std::optional<typename C::Obj>>;
};

template <Monoidal C>
MorOf<C> unit_identity(const C& c) {
  return c.identity(c.unit());
}

/// (f∘h)·(g∘k) against (f·g)∘(h·k).
template <Monoidal C>
bool check_interchange(const C& c, const MorOf<C>& f, const MorOf<C>& g, const MorOf<C>& h, const MorOf<C>& k) {
  if (!(c.source(f) == c.target(h))) throw NotComposable(c.render(f), c.render(h));
  if (!(c.source(g) == c.target(k))) throw NotComposable(c.render(g), c.render(k));
  return c.product(c.compose(f, h), c.compose(g, k)) == c.compose(c.product(f, g), c.product(h, k));
}

/// Statistics of the lifting map N2(f) x N2(g) -> N2(f·g).
struct LiftReport {
  std::string f, g;
  std::size_t n2_f = 0, n2_g = 0, n2_fg = 0;
  std::size_t domain = 0;
  std::size_t image = 0;
  std::map<std::size_t, std::size_t> fiber_histogram;  // fiber size -> number of targets
  bool lands_in_codomain = true;
  bool surjective = false;
  std::optional<std::size_t> constant_fiber;
  std::string witness;  // a target with a deviating fiber, or a stray image pair

  bool is_nlf(std::size_t n) const { return lands_in_codomain && surjective && constant_fiber == n; }
  std::string to_text() const;
};

inline std::string LiftReport::to_text() const {
  std::string s = "lift " + f + " x " + g + ": |N2(f)|=" + std::to_string(n2_f) + " |N2(g)|=" +
                  std::to_string(n2_g) + " |N2(f.g)|=" + std::to_string(n2_fg) + " domain=" +
                  std::to_string(domain) + " codomain=" + std::to_string(n2_fg) + " fibers{";
  bool first = true;
  for (const auto& [size, count] : fiber_histogram) {
    s += (first ? "" : ", ") + std::to_string(size) + ":" + std::to_string(count);
    first = false;
  }
  s += "} ";
  if (constant_fiber && surjective && lands_in_codomain)
    s += *constant_fiber == 1 ? "ULF" : std::to_string(*constant_fiber) + "-LF";
  else
    s += "not nLF";
  if (!witness.empty()) s += " witness " + witness;
  return s;
}

template <Monoidal C>
LiftReport check_nlf(const C& c, const N2Cache<C>& n2, const MorOf<C>& f, const MorOf<C>& g) {
  LiftReport r;
  r.f = c.render(f);
  r.g = c.render(g);
  const auto& df = n2(f);
  const auto& dg = n2(g);
  auto dfg = c.n2(c.product(f, g));
  r.n2_f = df.size();
  r.n2_g = dg.size();
  r.n2_fg = dfg.size();
  r.domain = df.size() * dg.size();
  if (!std::is_sorted(dfg.begin(), dfg.end())) std::sort(dfg.begin(), dfg.end());
  const auto& keys = dfg;
  std::vector<std::size_t> fiber(keys.size(), 0);
  for (const auto& [a, b] : df)
    for (const auto& [cc, d] : dg) {
      auto key = std::make_pair(c.product(a, cc), c.product(b, d));
      auto it = std::lower_bound(keys.begin(), keys.end(), key);
      if (it == keys.end() || !(*it == key)) {
        r.lands_in_codomain = false;
        if (r.witness.empty()) r.witness = detail::render_pair(c, key.first, key.second) + " outside N2(f.g)";
        continue;
      }
      ++fiber[static_cast<std::size_t>(it - keys.begin())];
    }
  std::optional<std::size_t> common;
  bool constant = true;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const std::size_t n = fiber[i];
    ++r.fiber_histogram[n];
    if (n > 0) ++r.image;
    if (!common) common = n;
    if (*common != n) {
      constant = false;
      if (r.witness.empty())
        r.witness = detail::render_pair(c, keys[i].first, keys[i].second) + " has fiber " + std::to_string(n);
    }
  }
  r.surjective = r.image == fiber.size();
  if (constant && common) r.constant_fiber = common;
  return r;
}

template <Monoidal C>
LiftReport check_nlf(const C& c, const MorOf<C>& f, const MorOf<C>& g) {
  N2Cache<C> n2(c);
  return check_nlf(c, n2, f, g);
}

/// Strict associativity and unitality of the product, and functoriality on identities.
template <Monoidal C>
Report check_strictness(const C& c, const std::vector<MorOf<C>>& sample, Exec exec = Exec::Parallel) {
  Report report(c.name() + ": strict monoidal structure");
  const auto one = unit_identity(c);
  detail::collect<C>(report, sample.size(), [&](std::size_t i) {
    const auto& f = sample[i];
    std::vector<Finding> out;
    std::string name = c.render(f);
    out.push_back({"unit laws", name, c.product(one, f) == f && c.product(f, one) == f, {}});
    bool typed = true, assoc = true, ident = true;
    std::string witness;
    for (const auto& g : sample) {
      auto fg = c.product(f, g);
      if (!(c.source(fg) == c.oproduct(c.source(f), c.source(g))) ||
          !(c.target(fg) == c.oproduct(c.target(f), c.target(g)))) {
        typed = false;
        witness = c.render(g);
      }
      if (c.is_identity(f) && c.is_identity(g) && !(fg == c.identity(c.oproduct(c.source(f), c.source(g)))))
        ident = false;
      for (const auto& h : sample)
        if (!(c.product(fg, h) == c.product(f, c.product(g, h)))) {
          assoc = false;
          witness = c.render(g) + " , " + c.render(h);
        }
    }
    out.push_back({"product typed by object product", name, typed, typed ? "" : witness});
    out.push_back({"product of identities is identity", name, ident, {}});
    out.push_back({"product associative", name, assoc, assoc ? "" : witness});
    return out;
  }, exec);
  return report;
}

/// Interchange on every pair of composable pairs drawn from the sample.
template <Monoidal C>
Report check_interchange_all(const C& c, const std::vector<MorOf<C>>& sample, Exec exec = Exec::Parallel) {
  Report report(c.name() + ": interchange law");
  std::vector<std::pair<MorOf<C>, MorOf<C>>> composable;
  for (const auto& f : sample)
    for (const auto& h : sample)
      if (c.source(f) == c.target(h)) composable.emplace_back(f, h);
  report.note(std::to_string(composable.size()) + " composable pairs");
  detail::collect<C>(report, composable.size(), [&](std::size_t i) {
    const auto& [f, h] = composable[i];
    std::vector<Finding> out;
    std::string witness;
    for (const auto& [g, k] : composable)
      if (!check_interchange(c, f, g, h, k)) {
        witness = detail::render_pair(c, g, k);
        break;
      }
    out.push_back({"interchange", detail::render_pair(c, f, h), witness.empty(), witness});
    return out;
  }, exec);
  return report;
}

/// Identities are reflected: f·g is an identity only when f and g are.
template <Monoidal C>
Report check_unit_reflection(const C& c, const std::vector<MorOf<C>>& sample, Exec exec = Exec::Parallel) {
  Report report(c.name() + ": identities reflected by product");
  detail::collect<C>(report, sample.size(), [&](std::size_t i) {
    const auto& f = sample[i];
    std::string witness;
    for (const auto& g : sample)
      if (c.is_identity(c.product(f, g)) && !(c.is_identity(f) && c.is_identity(g))) {
        witness = c.render(g);
        break;
      }
    return std::vector<Finding>{{"product reflects identities", c.render(f), witness.empty(), witness}};
  }, exec);
  return report;
}

/// n-to-one lifting on all sample pairs; with `n` unset any constant fiber is accepted.
template <Monoidal C>
Report check_lifting(const C& c, const N2Cache<C>& n2, const std::vector<MorOf<C>>& sample, std::optional<std::size_t> n,
                     Exec exec = Exec::Parallel) {
  Report report(c.name() + ": lifting of factorizations");
  detail::collect<C>(report, sample.size(), [&](std::size_t i) {
    std::vector<Finding> out;
    const auto& f = sample[i];
    for (const auto& g : sample) {
      LiftReport r = check_nlf(c, n2, f, g);
      bool ok = r.lands_in_codomain && r.surjective && r.constant_fiber && (!n || *r.constant_fiber == *n);
      std::string check = n && *n == 1 ? "ULF" : "nLF";
      if (!ok)
        out.push_back({check, detail::render_pair(c, f, g), false, r.to_text()});
      else
        out.push_back({check, detail::render_pair(c, f, g), true, {}});
    }
    return out;
  }, exec);
  return report;
}

/// Combinatorial category: Moebius, ULF, and reflection of identities on the sample.
template <Monoidal C>
Report check_combinatorial(const C& c, const std::vector<MorOf<C>>& sample, Exec exec = Exec::Parallel) {
  Report report(c.name() + ": combinatorial category");
  report.merge(check_mobius(c, sample, exec));
  N2Cache<C> n2(c);
  report.merge(check_lifting(c, n2, sample, std::size_t{1}, exec));
  report.merge(check_unit_reflection(c, sample, exec));
  return report;
}

/// Every object has a two-sided inverse under the object product.
template <HasObjectInverse C>
Report check_object_group(const C& c, const std::vector<ObjOf<C>>& objects) {
  Report report(c.name() + ": object monoid is a group");
  for (const auto& x : objects) {
    auto inv = c.object_inverse(x);
    bool ok = inv && c.oproduct(x, *inv) == c.unit() && c.oproduct(*inv, x) == c.unit();
    report.add("object invertible", c.render(c.identity(x)), ok);
  }
  return report;
}

}  // namespace incat
