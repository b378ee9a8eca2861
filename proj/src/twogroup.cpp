#include "incat/twogroup.hpp"

#include <algorithm>
#include <map>

#include "incat/error.hpp"

namespace incat {

using Elem = CrossedModule::Elem;

CrossedModule validate_crossed_module(FiniteGroup G, FiniteGroup H, std::vector<Elem> tau,
                                      std::vector<std::vector<Elem>> alpha, std::string label) {
  const int ng = G.size(), nh = H.size();
  if (static_cast<int>(tau.size()) != nh) throw InvariantViolation("tau must be defined on every element of H");
  if (static_cast<int>(alpha.size()) != ng) throw InvariantViolation("alpha must have one row per element of G");
  for (const auto& row : alpha)
    if (static_cast<int>(row.size()) != nh) throw InvariantViolation("alpha rows must cover H");
  auto hn = [&](Elem h) { return H.name(h); };
  auto gn = [&](Elem g) { return G.name(g); };
  for (Elem a = 0; a < nh; ++a) {
    if (tau[a] < 0 || tau[a] >= ng) throw InvariantViolation("tau value out of range");
    for (Elem b = 0; b < nh; ++b)
      if (tau[H.mul(a, b)] != G.mul(tau[a], tau[b]))
        throw InvariantViolation("tau is not a homomorphism at (" + hn(a) + ", " + hn(b) + ")");
  }
  for (Elem g = 0; g < ng; ++g) {
    for (Elem h = 0; h < nh; ++h)
      if (alpha[g][h] < 0 || alpha[g][h] >= nh) throw InvariantViolation("alpha value out of range");
    for (Elem a = 0; a < nh; ++a)
      for (Elem b = 0; b < nh; ++b)
        if (alpha[g][H.mul(a, b)] != H.mul(alpha[g][a], alpha[g][b]))
          throw InvariantViolation("alpha(" + gn(g) + ", -) is not a homomorphism at (" + hn(a) + ", " + hn(b) + ")");
  }
  for (Elem h = 0; h < nh; ++h) {
    if (alpha[G.unit()][h] != h) throw InvariantViolation("alpha(e, " + hn(h) + ") != " + hn(h));
    for (Elem g = 0; g < ng; ++g)
      for (Elem k = 0; k < ng; ++k)
        if (alpha[G.mul(g, k)][h] != alpha[g][alpha[k][h]])
          throw InvariantViolation("alpha is not an action at (" + gn(g) + ", " + gn(k) + ", " + hn(h) + ")");
  }
  for (Elem g = 0; g < ng; ++g)
    for (Elem h = 0; h < nh; ++h)
      if (tau[alpha[g][h]] != G.conj(g, tau[h]))
        throw InvariantViolation("equivariance fails at (" + gn(g) + ", " + hn(h) + ")");
  for (Elem h = 0; h < nh; ++h)
    for (Elem k = 0; k < nh; ++k)
      if (alpha[tau[h]][k] != H.conj(h, k))
        throw InvariantViolation("Peiffer identity fails at (" + hn(h) + ", " + hn(k) + ")");
  return {std::move(G), std::move(H), std::move(tau), std::move(alpha), std::move(label)};
}

CrossedModule normal_subgroup_xmod(const FiniteGroup& G, const std::vector<Elem>& N, std::string label) {
  if (!G.is_normal(N)) throw InvariantViolation("subset is not a normal subgroup");
  FiniteGroup H = subgroup(G, N);
  std::map<Elem, Elem> pos;
  for (std::size_t i = 0; i < N.size(); ++i) pos[N[i]] = static_cast<Elem>(i);
  std::vector<std::vector<Elem>> alpha(G.size(), std::vector<Elem>(N.size()));
  for (Elem g = 0; g < G.size(); ++g)
    for (std::size_t i = 0; i < N.size(); ++i) alpha[g][i] = pos.at(G.conj(g, N[i]));
  return validate_crossed_module(G, std::move(H), N, std::move(alpha), std::move(label));
}

CrossedModule aut_two_group(const FiniteGroup& G, std::string label) {
  auto autos = automorphisms(G);
  std::map<std::vector<Elem>, Elem> index;
  for (std::size_t i = 0; i < autos.size(); ++i) index[autos[i]] = static_cast<Elem>(i);
  const int n = static_cast<int>(autos.size());
  FiniteMonoid::Table table(n, std::vector<Elem>(n));
  std::vector<std::string> names;
  Elem unit = -1;
  for (int a = 0; a < n; ++a) {
    names.push_back("φ" + std::to_string(a));
    bool is_id = true;
    for (Elem x = 0; x < G.size(); ++x) is_id = is_id && autos[a][x] == x;
    if (is_id) unit = a;
    for (int b = 0; b < n; ++b) {
      std::vector<Elem> comp(G.size());
      for (Elem x = 0; x < G.size(); ++x) comp[x] = autos[a][autos[b][x]];
      table[a][b] = index.at(comp);
    }
  }
  FiniteGroup aut(std::move(table), unit, std::move(names));
  std::vector<Elem> inner;
  for (Elem g = 0; g < G.size(); ++g) {
    std::vector<Elem> conj(G.size());
    for (Elem x = 0; x < G.size(); ++x) conj[x] = G.conj(g, x);
    inner.push_back(index.at(conj));
  }
  std::sort(inner.begin(), inner.end());
  inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
  // Put the identity first so the subgroup's element 0 is its unit.
  std::stable_partition(inner.begin(), inner.end(), [&](Elem a) { return a == aut.unit(); });
  return normal_subgroup_xmod(aut, inner, std::move(label));
}

TwoGroupCategory::Mor TwoGroupCategory::compose(const Mor& a, const Mor& b) const {
  if (a.g != target(b)) throw NotComposable(render(a), render(b));
  return {xm_.H.mul(a.h, b.h), b.g};
}

std::vector<std::pair<TwoGroupCategory::Mor, TwoGroupCategory::Mor>> TwoGroupCategory::n2(const Mor& f) const {
  std::vector<std::pair<Mor, Mor>> out;
  for (Elem k = 0; k < xm_.H.size(); ++k) {
    Mor b{k, f.g};
    out.push_back({compose(f, inverse(b)), b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

TwoGroupCategory::Mor TwoGroupCategory::parse(const std::string& text) const {
  auto comma = text.rfind(',');
  if (text.size() < 5 || text.front() != '(' || text.back() != ')' || comma == std::string::npos)
    throw ParseError("expected (h,g)", 0);
  // Element names may themselves contain commas, so try every split.
  for (std::size_t split = 1; split + 1 < text.size(); ++split) {
    if (text[split] != ',') continue;
    auto h = xm_.H.find(text.substr(1, split - 1));
    auto g = xm_.G.find(text.substr(split + 1, text.size() - split - 2));
    if (h && g) return {*h, *g};
  }
  throw ParseError("unknown group elements in " + text, 1);
}

std::vector<TwoGroupCategory::Obj> TwoGroupCategory::objects() const {
  std::vector<Obj> out;
  for (Elem g = 0; g < xm_.G.size(); ++g) out.push_back(g);
  return out;
}

std::vector<TwoGroupCategory::Mor> TwoGroupCategory::morphisms() const {
  std::vector<Mor> out;
  for (Elem h = 0; h < xm_.H.size(); ++h)
    for (Elem g = 0; g < xm_.G.size(); ++g) out.push_back({h, g});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TwoGroupCategory::Mor> source_subgroup(const TwoGroupCategory& c) {
  std::vector<TwoGroupCategory::Mor> out;
  for (const auto& f : c.morphisms())
    if (c.source(f) == c.unit()) out.push_back(f);
  return out;
}

TwoGroupCategory::Mor monoidal_inverse(const TwoGroupCategory& c, const TwoGroupCategory::Mor& f) {
  const auto& G = c.xmod().G;
  return c.product(c.product(c.identity(G.inv(c.target(f))), c.inverse(f)), c.identity(G.inv(c.source(f))));
}

TwoGroupCategory::Mor theorem_antipode(const TwoGroupCategory& c, const TwoGroupCategory::Mor& f) {
  return c.inverse(monoidal_inverse(c, f));
}

TwoGroupCategory::Mor corollary_antipode(const TwoGroupCategory& c, const TwoGroupCategory::Mor& f) {
  const auto& xm = c.xmod();
  Elem gi = xm.G.inv(f.g);
  return {xm.H.inv(xm.alpha[gi][xm.H.inv(f.h)]), gi};
}

std::vector<std::pair<TwoGroupCategory::Mor, TwoGroupCategory::Mor>> corollary_coproduct_terms(
    const TwoGroupCategory& c, const TwoGroupCategory::Mor& f, bool printed) {
  const auto& xm = c.xmod();
  std::vector<std::pair<TwoGroupCategory::Mor, TwoGroupCategory::Mor>> out;
  for (Elem h1 = 0; h1 < xm.H.size(); ++h1) {
    // h2 solves h1 h2 = h (printed) or h2 h1 = h.
    Elem h2 = printed ? xm.H.mul(xm.H.inv(h1), f.h) : xm.H.mul(f.h, xm.H.inv(h1));
    out.push_back({{h2, xm.G.mul(xm.tau[h1], f.g)}, {h1, f.g}});
  }
  std::sort(out.begin(), out.end());
  return out;
}

CrossedModule xmod_from_two_group(const TwoGroupCategory& c) {
  const auto& G = c.xmod().G;
  auto S = source_subgroup(c);
  std::map<TwoGroupCategory::Mor, Elem> pos;
  for (std::size_t i = 0; i < S.size(); ++i) pos[S[i]] = static_cast<Elem>(i);
  const int n = static_cast<int>(S.size());
  FiniteMonoid::Table table(n, std::vector<Elem>(n));
  std::vector<std::string> names;
  Elem unit = pos.at(c.identity(c.unit()));
  for (int a = 0; a < n; ++a) {
    names.push_back(c.render(S[a]));
    for (int b = 0; b < n; ++b) table[a][b] = pos.at(c.product(S[a], S[b]));
  }
  FiniteGroup H(std::move(table), unit, std::move(names));
  std::vector<Elem> tau;
  for (const auto& s : S) tau.push_back(c.target(s));
  std::vector<std::vector<Elem>> alpha(G.size(), std::vector<Elem>(n));
  for (Elem g = 0; g < G.size(); ++g)
    for (int a = 0; a < n; ++a)
      alpha[g][a] = pos.at(c.product(c.product(c.identity(g), S[a]), c.identity(G.inv(g))));
  return validate_crossed_module(G, std::move(H), std::move(tau), std::move(alpha), c.name() + "/S");
}

namespace {

// Enumerates isomorphisms between two groups by backtracking.
void group_isos(const FiniteGroup& a, const FiniteGroup& b, std::vector<Elem>& map, std::vector<bool>& used, int next,
                const std::function<bool(const std::vector<Elem>&)>& visit, bool& done) {
  if (done) return;
  const int n = a.size();
  if (next == n) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return;
    done = visit(map);
    return;
  }
  for (Elem t = 0; t < n && !done; ++t) {
    if (used[t]) continue;
    if ((next == a.unit()) != (t == b.unit())) continue;
    map[next] = t;
    used[t] = true;
    group_isos(a, b, map, used, next + 1, visit, done);
    used[t] = false;
  }
}

}  // namespace

bool xmod_isomorphic(const CrossedModule& x, const CrossedModule& y) {
  if (x.G.size() != y.G.size() || x.H.size() != y.H.size()) return false;
  bool found = false;
  std::vector<Elem> mg(x.G.size()), mh(x.H.size());
  std::vector<bool> ug(x.G.size()), uh(x.H.size());
  bool done_g = false;
  group_isos(x.G, y.G, mg, ug, 0, [&](const std::vector<Elem>& fg) {
    bool done_h = false;
    group_isos(x.H, y.H, mh, uh, 0, [&](const std::vector<Elem>& fh) {
      for (Elem h = 0; h < x.H.size(); ++h)
        if (fg[x.tau[h]] != y.tau[fh[h]]) return false;
      for (Elem g = 0; g < x.G.size(); ++g)
        for (Elem h = 0; h < x.H.size(); ++h)
          if (fh[x.alpha[g][h]] != y.alpha[fg[g]][fh[h]]) return false;
      found = true;
      return true;
    }, done_h);
    return found;
  }, done_g);
  return found;
}

WeakHopfData weak_hopf_structure(const TwoGroupCategory& c) {
  return {Rational(static_cast<long>(source_subgroup(c).size())),
          [&c](const TwoGroupCategory::Mor& f) { return theorem_antipode(c, f); }};
}

}  // namespace incat
