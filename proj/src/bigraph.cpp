#include "incat/bigraph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <tuple>

#include "incat/error.hpp"

namespace incat {

int Bigraph::ports() const {
  int n = 0;
  for (const auto& l : links) n += static_cast<int>(l.ports.size());
  return n;
}

namespace {

void normalize(Bigraph& g) {
  for (auto& l : g.links) {
    std::sort(l.inner.begin(), l.inner.end());
    std::sort(l.outer.begin(), l.outer.end());
    std::sort(l.ports.begin(), l.ports.end());
  }
  std::sort(g.links.begin(), g.links.end());
  if (g.labels.size() < g.vpar.size()) g.labels.resize(g.vpar.size());
}

// Root reached from a parent code, or -1 on a cycle.
int top_root(const Bigraph& g, int p) {
  for (int steps = 0; p >= 0; ++steps) {
    if (steps > g.vertices()) return -1;
    p = g.vpar[p];
  }
  return root_index(p);
}

template <class T>
void set_partitions_rec(const std::vector<T>& items, std::size_t i, std::vector<std::vector<T>>& current,
                        std::vector<std::vector<std::vector<T>>>& out) {
  if (i == items.size()) {
    out.push_back(current);
    return;
  }
  for (std::size_t b = 0; b < current.size(); ++b) {
    current[b].push_back(items[i]);
    set_partitions_rec(items, i + 1, current, out);
    current[b].pop_back();
  }
  current.push_back({items[i]});
  set_partitions_rec(items, i + 1, current, out);
  current.pop_back();
}

template <class T>
std::vector<std::vector<std::vector<T>>> set_partitions(const std::vector<T>& items) {
  std::vector<std::vector<std::vector<T>>> out;
  std::vector<std::vector<T>> current;
  set_partitions_rec(items, 0, current, out);
  return out;
}

using Edges = std::vector<std::pair<int, int>>;

// Connected spanning simple bipartite graphs between a left and b right nodes.
const std::vector<Edges>& connected_bipartite(int a, int b) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Edges>> memo;
  std::lock_guard lock(mu);
  auto [it, fresh] = memo.try_emplace({a, b});
  if (!fresh) return it->second;
  Edges all;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) all.emplace_back(i, j);
  for (unsigned mask = 1; mask < (1u << all.size()); ++mask) {
    std::vector<int> parent(a + b);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    Edges es;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (mask >> k & 1u) {
        es.push_back(all[k]);
        parent[find(all[k].first)] = find(a + all[k].second);
      }
    bool connected = true;
    for (int x = 1; x < a + b; ++x) connected = connected && find(x) == find(0);
    if (connected) it->second.push_back(std::move(es));
  }
  return it->second;
}

// Isomorphism-invariant vertex colors, refined along the place forest.
std::vector<int> vertex_colors(const Bigraph& g) {
  const int n = g.vertices();
  std::vector<int> depth(n), top(n), nports(n, 0), nsites(n, 0);
  for (int v = 0; v < n; ++v) {
    int d = 0, p = v;
    while (p >= 0) {
      p = g.vpar[p];
      ++d;
    }
    depth[v] = d;
    top[v] = root_index(p);
  }
  for (const auto& l : g.links)
    for (int v : l.ports) ++nports[v];
  for (int p : g.spar)
    if (p >= 0) ++nsites[p];
  using Sig = std::tuple<int, int, std::string, int, int, std::vector<int>, int, std::vector<std::vector<int>>>;
  std::vector<int> color(n, 0);
  for (int round = 0; round <= n; ++round) {
    std::vector<Sig> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> kids;
      for (int w = 0; w < n; ++w)
        if (g.vpar[w] == v) kids.push_back(color[w]);
      std::sort(kids.begin(), kids.end());
      int parent = g.vpar[v] >= 0 ? color[g.vpar[v]] : -1 - root_index(g.vpar[v]);
      // Link neighbourhood: for each class touching v, its names and the colors of its other ports.
      std::vector<std::vector<int>> nbr;
      for (const auto& l : g.links) {
        int mine = static_cast<int>(std::count(l.ports.begin(), l.ports.end(), v));
        if (mine == 0) continue;
        std::vector<int> row{mine, -1};
        row.insert(row.end(), l.inner.begin(), l.inner.end());
        row.push_back(-2);
        row.insert(row.end(), l.outer.begin(), l.outer.end());
        row.push_back(-3);
        std::vector<int> others;
        for (int w : l.ports)
          if (w != v) others.push_back(color[w]);
        std::sort(others.begin(), others.end());
        row.insert(row.end(), others.begin(), others.end());
        nbr.push_back(std::move(row));
      }
      std::sort(nbr.begin(), nbr.end());
      sig[v] = {top[v], depth[v], g.labels[v], nports[v], nsites[v], std::move(kids), parent, std::move(nbr)};
    }
    std::vector<Sig> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    if (next == color && round > 0) break;
    color = std::move(next);
  }
  return color;
}

}  // namespace

std::optional<std::string> violation(const Bigraph& g) {
  const int n = g.vertices();
  if (g.roots < 0 || g.sites < 0 || g.inner < 0 || g.outer < 0) return "negative interface size";
  if (static_cast<int>(g.spar.size()) != g.sites) return "every site needs a parent";
  if (!g.labels.empty() && static_cast<int>(g.labels.size()) != n) return "labels must cover every vertex";
  std::vector<bool> used(g.roots, false);
  auto check_parent = [&](int p) -> bool {
    if (p >= 0) return p < n;
    if (root_index(p) >= g.roots) return false;
    used[root_index(p)] = true;
    return true;
  };
  for (int v = 0; v < n; ++v)
    if (!check_parent(g.vpar[v])) return "vertex v" + std::to_string(v) + " has an invalid parent";
  for (int s = 0; s < g.sites; ++s)
    if (!check_parent(g.spar[s])) return "site s" + std::to_string(s) + " has an invalid parent";
  for (int r = 0; r < g.roots; ++r)
    if (!used[r]) return "root r" + std::to_string(r) + " is not a parent";
  for (int v = 0; v < n; ++v)
    if (top_root(g, v) < 0) return "vertex v" + std::to_string(v) + " lies on a parent cycle";
  int last = 0;
  for (int s = 0; s < g.sites; ++s) {
    int t = top_root(g, g.spar[s]);
    if (t < 0) return "site s" + std::to_string(s) + " lies below a parent cycle";
    if (t < last) return "sites are not mapped monotonically to roots at s" + std::to_string(s);
    last = t;
  }
  std::vector<int> xs, ys;
  for (const auto& l : g.links) {
    if (l.inner.size() + l.outer.size() + l.ports.size() < 2) return "link class with fewer than two elements";
    if (l.outer.empty() && l.ports.empty()) return "link class inside the inner names";
    if (l.inner.empty() && l.ports.empty()) return "link class inside the outer names";
    xs.insert(xs.end(), l.inner.begin(), l.inner.end());
    ys.insert(ys.end(), l.outer.begin(), l.outer.end());
    for (int v : l.ports)
      if (v < 0 || v >= n) return "port on a missing vertex";
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  std::vector<int> want_x(g.inner), want_y(g.outer);
  std::iota(want_x.begin(), want_x.end(), 0);
  std::iota(want_y.begin(), want_y.end(), 0);
  if (xs != want_x) return "inner names must each lie in exactly one class";
  if (ys != want_y) return "outer names must each lie in exactly one class";
  return std::nullopt;
}

Bigraph validated(Bigraph g) {
  normalize(g);
  if (auto why = violation(g)) throw InvariantViolation("invalid bigraph: " + *why);
  return g;
}

Bigraph relabel(const Bigraph& g, const std::vector<int>& pos) {
  Bigraph out;
  out.roots = g.roots;
  out.sites = g.sites;
  out.inner = g.inner;
  out.outer = g.outer;
  const int n = g.vertices();
  auto map = [&](int p) { return p >= 0 ? pos[p] : p; };
  out.vpar.assign(n, 0);
  out.labels.assign(n, {});
  for (int v = 0; v < n; ++v) {
    out.vpar[pos[v]] = map(g.vpar[v]);
    out.labels[pos[v]] = v < static_cast<int>(g.labels.size()) ? g.labels[v] : std::string();
  }
  out.spar.reserve(g.sites);
  for (int p : g.spar) out.spar.push_back(map(p));
  out.links = g.links;
  for (auto& l : out.links)
    for (int& v : l.ports) v = pos[v];
  normalize(out);
  return out;
}

Bigraph canonical_form(const Bigraph& g) {
  const int n = g.vertices();
  if (n == 0) {
    Bigraph out = g;
    normalize(out);
    return out;
  }
  std::optional<Bigraph> best;
  std::vector<int> pos(n);
  if (n <= 4) {
    std::iota(pos.begin(), pos.end(), 0);
    do {
      Bigraph cand = relabel(g, pos);
      if (!best || cand < *best) best = std::move(cand);
    } while (std::next_permutation(pos.begin(), pos.end()));
    return *best;
  }
  auto color = vertex_colors(g);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b]; });
  // Blocks of equal color; candidates permute vertices inside each block.
  std::vector<std::pair<int, int>> blocks;
  double count = 1;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && color[order[j]] == color[order[i]]) ++j;
    blocks.emplace_back(i, j);
    for (int k = 2; k <= j - i; ++k) count *= k;
    i = j;
  }
  if (count > 5e6) throw EnumerationBound("canonical form needs too many vertex orders");
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      for (int i = 0; i < n; ++i) pos[order[i]] = i;
      Bigraph cand = relabel(g, pos);
      if (!best || cand < *best) best = std::move(cand);
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      rec(b + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  rec(0);
  return *best;
}

bool support_isomorphic(const Bigraph& a, const Bigraph& b) {
  if (a.vertices() != b.vertices()) return false;
  Bigraph nb = b;
  normalize(nb);
  std::vector<int> pos(a.vertices());
  std::iota(pos.begin(), pos.end(), 0);
  do {
    if (relabel(a, pos) == nb) return true;
  } while (std::next_permutation(pos.begin(), pos.end()));
  return false;
}

Bigraph bigraph_identity(int places, int names) {
  Bigraph g;
  g.roots = g.sites = places;
  g.inner = g.outer = names;
  for (int s = 0; s < places; ++s) g.spar.push_back(root_code(s));
  for (int x = 0; x < names; ++x) g.links.push_back({{x}, {x}, {}});
  return g;
}

Bigraph compose(const Bigraph& g, const Bigraph& f) {
  if (g.sites != f.roots || g.inner != f.outer)
    throw NotComposable(render_bigraph(g), render_bigraph(f));
  const int n = f.vertices();
  auto up = [&](int p) { return p >= 0 ? p + n : p; };
  auto through = [&](int p) { return p >= 0 ? p : up(g.spar[root_index(p)]); };
  Bigraph out;
  out.roots = g.roots;
  out.sites = f.sites;
  out.inner = f.inner;
  out.outer = g.outer;
  for (int p : f.vpar) out.vpar.push_back(through(p));
  for (int p : g.vpar) out.vpar.push_back(up(p));
  out.labels = f.labels;
  out.labels.resize(n);
  for (int v = 0; v < g.vertices(); ++v) out.labels.push_back(v < static_cast<int>(g.labels.size()) ? g.labels[v] : "");
  for (int p : f.spar) out.spar.push_back(through(p));
  const int F = static_cast<int>(f.links.size());
  const int G = static_cast<int>(g.links.size());
  std::vector<int> parent(F + G);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<int> class_of_y(f.outer, -1);
  for (int i = 0; i < F; ++i)
    for (int y : f.links[i].outer) class_of_y[y] = i;
  for (int j = 0; j < G; ++j)
    for (int x : g.links[j].inner) parent[find(F + j)] = find(class_of_y[x]);
  std::map<int, Link> merged;
  for (int i = 0; i < F; ++i) {
    auto& l = merged[find(i)];
    l.inner.insert(l.inner.end(), f.links[i].inner.begin(), f.links[i].inner.end());
    l.ports.insert(l.ports.end(), f.links[i].ports.begin(), f.links[i].ports.end());
  }
  for (int j = 0; j < G; ++j) {
    auto& l = merged[find(F + j)];
    l.outer.insert(l.outer.end(), g.links[j].outer.begin(), g.links[j].outer.end());
    for (int v : g.links[j].ports) l.ports.push_back(v + n);
  }
  for (auto& [k, l] : merged) out.links.push_back(std::move(l));
  normalize(out);
  return out;
}

Bigraph product(const Bigraph& f, const Bigraph& g) {
  const int n = f.vertices();
  auto shift = [&](int p) { return p >= 0 ? p + n : root_code(root_index(p) + f.roots); };
  Bigraph out = f;
  out.labels.resize(n);
  out.roots += g.roots;
  out.sites += g.sites;
  out.inner += g.inner;
  out.outer += g.outer;
  for (int v = 0; v < g.vertices(); ++v) {
    out.vpar.push_back(shift(g.vpar[v]));
    out.labels.push_back(v < static_cast<int>(g.labels.size()) ? g.labels[v] : "");
  }
  for (int p : g.spar) out.spar.push_back(shift(p));
  for (const auto& l : g.links) {
    Link m;
    for (int x : l.inner) m.inner.push_back(x + f.inner);
    for (int y : l.outer) m.outer.push_back(y + f.outer);
    for (int v : l.ports) m.ports.push_back(v + n);
    out.links.push_back(std::move(m));
  }
  normalize(out);
  return out;
}

// ---------------------------------------------------------------- literals

std::string render_bigraph(const Bigraph& g) {
  std::string s = "bigraph{roots=" + std::to_string(g.roots) + ";sites=" + std::to_string(g.sites) +
                  ";inner=" + std::to_string(g.inner) + ";outer=" + std::to_string(g.outer) +
                  ";vertices=" + std::to_string(g.vertices()) + ";prnt=[";
  auto code = [](int p) { return p >= 0 ? "v" + std::to_string(p) : "r" + std::to_string(root_index(p)); };
  bool first = true;
  auto sep = [&] {
    if (!first) s += ",";
    first = false;
  };
  for (int v = 0; v < g.vertices(); ++v) {
    sep();
    s += "v" + std::to_string(v) + ":" + code(g.vpar[v]);
  }
  for (int i = 0; i < g.sites; ++i) {
    sep();
    s += "s" + std::to_string(i) + ":" + code(g.spar[i]);
  }
  s += "]";
  std::string ports, classes;
  int p = 0;
  for (const auto& l : g.links) {
    classes += classes.empty() ? "{" : ",{";
    std::string members;
    auto add = [&](const std::string& m) { members += (members.empty() ? "" : ",") + m; };
    for (int x : l.inner) add("x" + std::to_string(x));
    for (int v : l.ports) {
      ports += (ports.empty() ? "" : ",") + ("p" + std::to_string(p) + ":v" + std::to_string(v));
      add("p" + std::to_string(p++));
    }
    for (int y : l.outer) add("y" + std::to_string(y));
    classes += members + "}";
  }
  if (!ports.empty()) s += ";ports=[" + ports + "]";
  if (!classes.empty()) s += ";classes=[" + classes + "]";
  std::string labels;
  for (int v = 0; v < g.vertices(); ++v)
    if (v < static_cast<int>(g.labels.size()) && !g.labels[v].empty())
      labels += (labels.empty() ? "" : ",") + ("v" + std::to_string(v) + ":" + g.labels[v]);
  if (!labels.empty()) s += ";labels=[" + labels + "]";
  return s + "}";
}

namespace {

class LiteralReader {
 public:
  explicit LiteralReader(const std::string& text) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        where_.push_back(i);
      }
  }

  std::size_t pos() const { return i_ < where_.size() ? where_[i_] : (where_.empty() ? 0 : where_.back() + 1); }
  bool done() const { return i_ == chars_.size(); }
  char peek() const { return done() ? '\0' : chars_[i_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos());
  }
  void expect(const std::string& word) {
    for (char c : word) expect(c);
  }
  std::string word() {
    std::string w;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                       static_cast<unsigned char>(peek()) >= 0x80))
      w += chars_[i_++];
    if (w.empty()) throw ParseError("expected a name", pos());
    return w;
  }
  int number() {
    std::size_t at = pos();
    std::string w;
    while (std::isdigit(static_cast<unsigned char>(peek()))) w += chars_[i_++];
    if (w.empty()) throw ParseError("expected a number", at);
    return std::stoi(w);
  }
  // Element reference like v3; returns the index after checking the prefix letter.
  std::pair<char, int> ref() {
    std::size_t at = pos();
    char kind = peek();
    if (kind != 'v' && kind != 'r' && kind != 's' && kind != 'p' && kind != 'x' && kind != 'y')
      throw ParseError("expected an element reference such as v0", at);
    ++i_;
    return {kind, number()};
  }

 private:
  std::string chars_;
  std::vector<std::size_t> where_;
  std::size_t i_ = 0;
};

}  // namespace

Bigraph parse_bigraph(const std::string& text) {
  LiteralReader in(text);
  in.expect("bigraph");
  in.expect('{');
  std::map<std::string, int> sizes;
  std::map<std::pair<char, int>, std::pair<char, int>> prnt;
  std::map<int, int> rho;
  std::vector<std::vector<std::pair<char, int>>> classes;
  std::map<int, std::string> labels;
  std::set<std::string> seen;
  std::optional<int> vertices;
  while (!in.accept('}')) {
    std::size_t at = in.pos();
    std::string field = in.word();
    if (!seen.insert(field).second) throw ParseError("duplicate field " + field, at);
    in.expect('=');
    if (field == "roots" || field == "sites" || field == "inner" || field == "outer") {
      sizes[field] = in.number();
    } else if (field == "vertices") {
      vertices = in.number();
    } else if (field == "prnt" || field == "ports" || field == "labels") {
      in.expect('[');
      while (!in.accept(']')) {
        std::size_t item_at = in.pos();
        auto lhs = in.ref();
        in.expect(':');
        if (field == "labels") {
          if (lhs.first != 'v') throw ParseError("labels apply to vertices", item_at);
          labels[lhs.second] = in.word();
        } else {
          auto rhs = in.ref();
          if (field == "prnt") {
            if ((lhs.first != 'v' && lhs.first != 's') || (rhs.first != 'v' && rhs.first != 'r'))
              throw ParseError("prnt maps v/s to v/r", item_at);
            if (!prnt.emplace(lhs, rhs).second) throw ParseError("parent given twice", item_at);
          } else {
            if (lhs.first != 'p' || rhs.first != 'v') throw ParseError("ports map p to v", item_at);
            if (!rho.emplace(lhs.second, rhs.second).second) throw ParseError("port given twice", item_at);
          }
        }
        if (!in.accept(',') && in.peek() != ']') throw ParseError("expected ',' or ']'", in.pos());
      }
    } else if (field == "classes") {
      in.expect('[');
      while (!in.accept(']')) {
        in.expect('{');
        std::vector<std::pair<char, int>> members;
        while (!in.accept('}')) {
          std::size_t item_at = in.pos();
          auto m = in.ref();
          if (m.first != 'p' && m.first != 'x' && m.first != 'y')
            throw ParseError("classes contain ports and names", item_at);
          members.push_back(m);
          if (!in.accept(',') && in.peek() != '}') throw ParseError("expected ',' or '}'", in.pos());
        }
        classes.push_back(std::move(members));
        if (!in.accept(',') && in.peek() != ']') throw ParseError("expected ',' or ']'", in.pos());
      }
    } else {
      throw ParseError("unknown field " + field, at);
    }
    if (!in.accept(';') && in.peek() != '}') throw ParseError("expected ';' or '}'", in.pos());
  }
  if (!in.done()) throw ParseError("trailing input", in.pos());
  for (const char* need : {"roots", "sites", "inner", "outer"})
    if (!sizes.count(need)) throw ParseError(std::string("missing field ") + need, 0);
  Bigraph g;
  g.roots = sizes["roots"];
  g.sites = sizes["sites"];
  g.inner = sizes["inner"];
  g.outer = sizes["outer"];
  int n = 0;
  for (const auto& [k, v] : prnt)
    if (k.first == 'v') n = std::max(n, k.second + 1);
  if (vertices) {
    if (*vertices < n) throw ParseError("prnt mentions more vertices than declared", 0);
    n = *vertices;
  }
  auto code = [&](std::pair<char, int> r) { return r.first == 'v' ? r.second : root_code(r.second); };
  g.vpar.assign(n, 0);
  g.labels.assign(n, {});
  for (int v = 0; v < n; ++v) {
    auto it = prnt.find({'v', v});
    if (it == prnt.end()) throw ParseError("vertex v" + std::to_string(v) + " has no parent", 0);
    g.vpar[v] = code(it->second);
  }
  for (int s = 0; s < g.sites; ++s) {
    auto it = prnt.find({'s', s});
    if (it == prnt.end()) throw ParseError("site s" + std::to_string(s) + " has no parent", 0);
    g.spar.push_back(code(it->second));
  }
  if (prnt.size() != static_cast<std::size_t>(n + g.sites)) throw ParseError("prnt mentions unknown elements", 0);
  for (const auto& [v, l] : labels) {
    if (v >= n) throw ParseError("label on unknown vertex", 0);
    g.labels[v] = l;
  }
  std::set<int> used_ports;
  for (const auto& members : classes) {
    Link l;
    for (auto [kind, i] : members) {
      if (kind == 'x') l.inner.push_back(i);
      if (kind == 'y') l.outer.push_back(i);
      if (kind == 'p') {
        auto it = rho.find(i);
        if (it == rho.end()) throw ParseError("port p" + std::to_string(i) + " has no vertex", 0);
        if (!used_ports.insert(i).second) throw ParseError("port p" + std::to_string(i) + " in two classes", 0);
        l.ports.push_back(it->second);
      }
    }
    g.links.push_back(std::move(l));
  }
  if (used_ports.size() != rho.size()) throw ParseError("every port must lie in a class", 0);
  return validated(std::move(g));
}

// ---------------------------------------------------------- factorizations

namespace {

// Link point of f seen from a cut: kind 0 inner name, 1 port, 2 outer name.
struct Point {
  int kind;
  int a;  // name index or vertex
  int b;  // ordinal of the port inside its class
  friend auto operator<=>(const Point&, const Point&) = default;
};

struct ClassSplit {
  std::vector<std::vector<Point>> lower;  // blocks on the lower side
  std::vector<std::vector<Point>> upper;  // blocks on the upper side
  Edges names;                            // middle names as (lower block, upper block)
};

struct Place {
  int parent;               // parent code in f, kept in the upper factor
  std::vector<int> tokens;  // children of f cut off: vertex v, or site s as n + s
};

void product_of_choices(const std::vector<std::size_t>& sizes, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(sizes.size(), 0);
  for (std::size_t s : sizes)
    if (s == 0) return;
  while (true) {
    fn(idx);
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == sizes[k]) idx[k++] = 0;
    if (k == idx.size()) return;
  }
}

}  // namespace

std::vector<std::pair<Bigraph, Bigraph>> n2_bigraph(const Bigraph& f0, const N2Options& options) {
  const Bigraph f = canonical_form(f0);
  const int n = f.vertices();
  if (n > 20) throw EnumerationBound("too many vertices for factorization enumeration");
  std::map<int, std::vector<int>> children;
  for (int v = 0; v < n; ++v) children[f.vpar[v]].push_back(v);
  for (int s = 0; s < f.sites; ++s) children[f.spar[s]].push_back(n + s);

  std::set<std::pair<Bigraph, Bigraph>> out;
  std::size_t candidates = 0;

  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    auto upper_v = [&](int v) { return (mask >> v & 1u) != 0; };
    bool closed = true;
    for (int v = 0; v < n; ++v)
      if (upper_v(v) && f.vpar[v] >= 0 && !upper_v(f.vpar[v])) closed = false;
    if (!closed) continue;

    std::vector<int> gv, hv, gidx(n, -1), hidx(n, -1);
    for (int v = 0; v < n; ++v) {
      if (upper_v(v)) {
        gidx[v] = static_cast<int>(gv.size());
        gv.push_back(v);
      } else {
        hidx[v] = static_cast<int>(hv.size());
        hv.push_back(v);
      }
    }

    // Link splits are independent of the place structure.
    std::vector<std::vector<ClassSplit>> splits;
    for (const auto& l : f.links) {
      std::vector<Point> lower, upper;
      for (int x : l.inner) lower.push_back({0, x, 0});
      for (std::size_t k = 0; k < l.ports.size(); ++k) {
        Point p{1, l.ports[k], static_cast<int>(k)};
        (upper_v(l.ports[k]) ? upper : lower).push_back(p);
      }
      for (int y : l.outer) upper.push_back({2, y, 0});
      std::vector<ClassSplit> opts;
      if (upper.empty()) {
        opts.push_back({{lower}, {}, {}});
      } else if (lower.empty()) {
        opts.push_back({{}, {upper}, {}});
      } else {
        for (auto& pl : set_partitions(lower))
          for (auto& pu : set_partitions(upper))
            for (const auto& es : connected_bipartite(static_cast<int>(pl.size()), static_cast<int>(pu.size())))
              opts.push_back({pl, pu, es});
      }
      splits.push_back(std::move(opts));
    }

    // Place structure: partition the cut-off children of each upper parent into middle places.
    std::vector<int> gparents;
    for (int r = 0; r < f.roots; ++r) gparents.push_back(root_code(r));
    for (int v : gv) gparents.push_back(v);
    std::vector<std::vector<std::vector<std::vector<int>>>> per_parent;
    for (int p : gparents) {
      std::vector<int> cut;
      for (int c : children[p])
        if (c >= n || !upper_v(c)) cut.push_back(c);
      per_parent.push_back(set_partitions(cut));
    }
    std::vector<std::size_t> parent_sizes;
    for (const auto& pp : per_parent) parent_sizes.push_back(pp.size());

    product_of_choices(parent_sizes, [&](const std::vector<std::size_t>& pick) {
      std::vector<Place> blocks;
      for (std::size_t i = 0; i < gparents.size(); ++i)
        for (const auto& b : per_parent[i][pick[i]]) blocks.push_back({gparents[i], b});
      std::vector<int> order(blocks.size());
      std::iota(order.begin(), order.end(), 0);
      do {
        const int places = static_cast<int>(blocks.size());
        std::vector<int> place_of(n + f.sites, -1);
        for (int m = 0; m < places; ++m)
          for (int t : blocks[order[m]].tokens) place_of[t] = m;
        Bigraph g, h;
        g.roots = f.roots;
        g.sites = places;
        g.outer = f.outer;
        h.roots = places;
        h.sites = f.sites;
        h.inner = f.inner;
        auto gmap = [&](int p) { return p >= 0 ? gidx[p] : p; };
        for (int v : gv) {
          g.vpar.push_back(gmap(f.vpar[v]));
          g.labels.push_back(f.labels[v]);
        }
        for (int m = 0; m < places; ++m) g.spar.push_back(gmap(blocks[order[m]].parent));
        auto hmap = [&](int token, int p) { return p >= 0 && !upper_v(p) ? hidx[p] : root_code(place_of[token]); };
        for (int v : hv) {
          h.vpar.push_back(hmap(v, f.vpar[v]));
          h.labels.push_back(f.labels[v]);
        }
        for (int s = 0; s < f.sites; ++s) h.spar.push_back(hmap(n + s, f.spar[s]));
        auto monotone = [](const Bigraph& b) {
          int last = 0;
          for (int p : b.spar) {
            int t = top_root(b, p);
            if (t < last) return false;
            last = t;
          }
          return true;
        };
        if (!monotone(g) || !monotone(h)) continue;

        std::vector<std::size_t> split_sizes;
        for (const auto& s : splits) split_sizes.push_back(s.size());
        product_of_choices(split_sizes, [&](const std::vector<std::size_t>& choice) {
          // Middle names as (class, lower block, upper block).
          std::vector<std::tuple<int, int, int>> names;
          for (std::size_t c = 0; c < splits.size(); ++c)
            for (auto [i, j] : splits[c][choice[c]].names) names.emplace_back(static_cast<int>(c), i, j);
          const int M = static_cast<int>(names.size());
          std::vector<int> name_order(M);
          std::iota(name_order.begin(), name_order.end(), 0);
          do {
            if (++candidates > options.limit)
              throw EnumerationBound("more than " + std::to_string(options.limit) +
                                     " candidate factorizations of " + render_bigraph(f));
            std::vector<int> position(M);
            for (int k = 0; k < M; ++k) position[name_order[k]] = k;
            Bigraph gg = g, hh = h;
            gg.inner = M;
            hh.outer = M;
            for (std::size_t c = 0; c < splits.size(); ++c) {
              const auto& s = splits[c][choice[c]];
              auto lower_link = [&](const std::vector<Point>& blk) {
                Link l;
                for (const auto& p : blk) {
                  if (p.kind == 0) l.inner.push_back(p.a);
                  if (p.kind == 1) l.ports.push_back(hidx[p.a]);
                }
                return l;
              };
              auto upper_link = [&](const std::vector<Point>& blk) {
                Link l;
                for (const auto& p : blk) {
                  if (p.kind == 2) l.outer.push_back(p.a);
                  if (p.kind == 1) l.ports.push_back(gidx[p.a]);
                }
                return l;
              };
              if (s.names.empty()) {
                if (!s.lower.empty()) hh.links.push_back(lower_link(s.lower[0]));
                if (!s.upper.empty()) gg.links.push_back(upper_link(s.upper[0]));
                continue;
              }
              for (std::size_t i = 0; i < s.lower.size(); ++i) {
                Link l = lower_link(s.lower[i]);
                for (int k = 0; k < M; ++k)
                  if (std::get<0>(names[k]) == static_cast<int>(c) && std::get<1>(names[k]) == static_cast<int>(i))
                    l.outer.push_back(position[k]);
                hh.links.push_back(std::move(l));
              }
              for (std::size_t j = 0; j < s.upper.size(); ++j) {
                Link l = upper_link(s.upper[j]);
                for (int k = 0; k < M; ++k)
                  if (std::get<0>(names[k]) == static_cast<int>(c) && std::get<2>(names[k]) == static_cast<int>(j))
                    l.inner.push_back(position[k]);
                gg.links.push_back(std::move(l));
              }
            }
            out.emplace(canonical_form(gg), canonical_form(hh));
          } while (std::next_permutation(name_order.begin(), name_order.end()));
        });
      } while (std::next_permutation(order.begin(), order.end()));
    });
  }
  return {out.begin(), out.end()};
}

bool is_reduced(const Bigraph& upper, const Bigraph& lower) {
  if (upper.inner != lower.outer) return false;
  std::vector<int> up(upper.inner, -1), down(lower.outer, -1);
  for (std::size_t c = 0; c < upper.links.size(); ++c)
    for (int x : upper.links[c].inner) up[x] = static_cast<int>(c);
  for (std::size_t c = 0; c < lower.links.size(); ++c)
    for (int y : lower.links[c].outer) down[y] = static_cast<int>(c);
  std::set<std::pair<int, int>> seen;
  for (int m = 0; m < upper.inner; ++m)
    if (!seen.emplace(down[m], up[m]).second) return false;
  return true;
}

// ---------------------------------------------------------------- fragment

std::vector<Bigraph> bigraph_fragment(const BigraphBounds& bounds) {
  std::set<Bigraph> out;
  for (int R = 0; R <= bounds.max_roots; ++R)
    for (int S = 0; S <= bounds.max_sites; ++S)
      for (int X = 0; X <= bounds.max_inner; ++X)
        for (int Y = 0; Y <= bounds.max_outer; ++Y)
          for (int V = 0; V <= bounds.max_vertices; ++V) {
            std::vector<int> parents;
            for (int r = 0; r < R; ++r) parents.push_back(root_code(r));
            for (int v = 0; v < V; ++v) parents.push_back(v);
            if (parents.empty() && V + S > 0) continue;
            std::vector<std::size_t> slots(V + S, parents.size());
            std::vector<std::size_t> label_slots(V, bounds.labels.size());
            product_of_choices(slots, [&](const std::vector<std::size_t>& pick) {
              Bigraph base;
              base.roots = R;
              base.sites = S;
              base.inner = X;
              base.outer = Y;
              for (int v = 0; v < V; ++v) {
                if (parents[pick[v]] == v) return;
                base.vpar.push_back(parents[pick[v]]);
              }
              for (int s = 0; s < S; ++s) base.spar.push_back(parents[pick[V + s]]);
              base.labels.assign(V, {});
              Bigraph probe = base;
              probe.inner = probe.outer = 0;
              if (violation(probe)) return;
              product_of_choices(label_slots, [&](const std::vector<std::size_t>& lab) {
                for (int v = 0; v < V; ++v) base.labels[v] = bounds.labels[lab[v]];
                for (int P = 0; P <= bounds.max_ports; ++P) {
                  if (V == 0 && P > 0) break;
                  // Multisets of P vertices, as non-decreasing sequences.
                  std::vector<int> ports(P, 0);
                  while (true) {
                    std::vector<Point> points;
                    for (int x = 0; x < X; ++x) points.push_back({0, x, 0});
                    for (int k = 0; k < P; ++k) points.push_back({1, ports[k], k});
                    for (int y = 0; y < Y; ++y) points.push_back({2, y, 0});
                    for (const auto& part : set_partitions(points)) {
                      Bigraph g = base;
                      for (const auto& blk : part) {
                        Link l;
                        for (const auto& p : blk) {
                          if (p.kind == 0) l.inner.push_back(p.a);
                          if (p.kind == 1) l.ports.push_back(p.a);
                          if (p.kind == 2) l.outer.push_back(p.a);
                        }
                        g.links.push_back(std::move(l));
                      }
                      normalize(g);
                      if (!violation(g)) out.insert(canonical_form(g));
                    }
                    int k = P - 1;
                    while (k >= 0 && ports[k] == V - 1) --k;
                    if (k < 0) break;
                    ++ports[k];
                    for (int j = k + 1; j < P; ++j) ports[j] = ports[k];
                  }
                }
              });
            });
          }
  return {out.begin(), out.end()};
}

// --------------------------------------------------------------- reactions

Bigraph apply_rule(const ReactionRule& rule, const Bigraph& g0) {
  const Bigraph g = canonical_form(g0);
  const int n = g.vertices();
  for (int a = 0; a < n; ++a) {
    if (g.labels[a] != rule.first || g.vpar[a] >= 0) continue;
    for (int b = 0; b < n; ++b) {
      if (b == a || g.labels[b] != rule.second || g.vpar[b] != g.vpar[a]) continue;
      // Merge b into a: b's children and ports move to a, and b disappears.
      Bigraph out = g;
      out.labels[a] = rule.merged;
      auto remap = [&](int p) {
        if (p == b) p = a;
        return p > b ? p - 1 : p;
      };
      out.vpar.clear();
      out.labels.clear();
      for (int v = 0; v < n; ++v) {
        if (v == b) continue;
        out.vpar.push_back(remap(g.vpar[v]));
        out.labels.push_back(v == a ? rule.merged : g.labels[v]);
      }
      for (int& p : out.spar) p = remap(p);
      for (auto& l : out.links)
        for (int& v : l.ports) v = remap(v);
      return canonical_form(validated(std::move(out)));
    }
  }
  return g;
}

Bigraph merge_context(int places, int names) {
  if (places < 1) throw PreconditionViolation("a merge context needs at least one place");
  Bigraph g;
  g.roots = 1;
  g.sites = places;
  g.inner = g.outer = names;
  g.spar.assign(places, root_code(0));
  for (int x = 0; x < names; ++x) g.links.push_back({{x}, {x}, {}});
  return g;
}

std::vector<BlockedReaction> blocked_reaction_terms(const ReactionRule& rule, const Bigraph& g, int depth,
                                                   const N2Options& options) {
  std::vector<BlockedReaction> out;
  for (const auto& [a, b] : n2_bigraph(g, options)) {
    if (b.roots < 1 || b.roots > depth) continue;
    Bigraph context = compose(merge_context(b.roots, b.outer), b);
    Bigraph before = canonical_form(context);
    Bigraph after = apply_rule(rule, before);
    if (after != before) out.push_back({a, b, b.roots, after});
  }
  return out;
}

FreeVec2<Bigraph> blocked_reactions(const ReactionRule& rule, const Bigraph& g, int depth, const N2Options& options) {
  FreeVec2<Bigraph> out;
  for (const auto& t : blocked_reaction_terms(rule, g, depth, options)) out.add_term({t.upper, t.reacted}, Rational(1));
  return out;
}

}  // namespace incat
