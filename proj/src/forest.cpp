#include "incat/forest.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "incat/error.hpp"

namespace incat {

namespace {

void encode_tree(const Tree& t, std::string& out) {
  if (!t.black) {
    out += 'W';
    return;
  }
  out += "B(";
  for (std::size_t i = 0; i < t.kids.size(); ++i) {
    if (i) out += ',';
    encode_tree(t.kids[i], out);
  }
  out += ')';
}

class TreeParser {
 public:
  explicit TreeParser(const std::string& text) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        s_ += text[i];
        where_.push_back(i);
      }
    where_.push_back(text.size());
  }

  std::vector<Tree> forest() {
    if (s_.compare(0, 3, "id(") == 0) {
      pos_ = 3;
      int n = number();
      expect(')');
      finish();
      return std::vector<Tree>(static_cast<std::size_t>(n), Tree::white());
    }
    expect('[');
    std::vector<Tree> out;
    if (peek() != ']') {
      out.push_back(tree());
      while (peek() == ',') {
        ++pos_;
        out.push_back(tree());
      }
    }
    expect(']');
    finish();
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, where_[pos_]); }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void finish() const {
    if (pos_ != s_.size()) fail("trailing characters");
  }
  int number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoi(s_.substr(start, pos_ - start));
  }
  Tree tree() {
    if (peek() == 'W') {
      ++pos_;
      return Tree::white();
    }
    expect('B');
    expect('(');
    Tree t = Tree::node();
    if (peek() != ')') {
      t.kids.push_back(tree());
      while (peek() == ',') {
        ++pos_;
        t.kids.push_back(tree());
      }
    }
    expect(')');
    return t;
  }

  std::string s_;
  std::vector<std::size_t> where_;
  std::size_t pos_ = 0;
};

int count_black(const Tree& t) {
  int n = t.black ? 1 : 0;
  for (const auto& k : t.kids) n += count_black(k);
  return n;
}

int count_leaves(const Tree& t) {
  if (!t.black) return 1;
  int n = 0;
  for (const auto& k : t.kids) n += count_leaves(k);
  return n;
}

// Replaces leaves left to right by the trees in `sub`, advancing `next`.
Tree substitute(const Tree& t, const std::vector<Tree>& sub, std::size_t& next) {
  if (!t.black) return sub[next++];
  Tree out = Tree::node();
  for (const auto& k : t.kids) out.kids.push_back(substitute(k, sub, next));
  return out;
}

// Core trees: every vertex is black; encoded as • or •(c,...).
void encode_core(const Tree& t, std::string& out) {
  out += "•";
  bool any = false;
  for (const auto& k : t.kids) {
    if (!k.black) continue;
    out += any ? "," : "(";
    encode_core(k, out);
    any = true;
  }
  if (any) out += ')';
}

std::vector<Tree> parse_core_trees(const std::string& text) {
  const std::string dot = "•";
  const std::string times = "·";
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::vector<Tree> out;
  if (s == "1" || s.empty()) return out;
  std::size_t pos = 0;
  std::function<Tree()> tree = [&]() {
    if (s.compare(pos, dot.size(), dot) != 0) throw ParseError("expected vertex", pos);
    pos += dot.size();
    Tree t = Tree::node();
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      t.kids.push_back(tree());
      while (pos < s.size() && s[pos] == ',') {
        ++pos;
        t.kids.push_back(tree());
      }
      if (pos >= s.size() || s[pos] != ')') throw ParseError("expected ')'", pos);
      ++pos;
    }
    return t;
  };
  out.push_back(tree());
  while (pos < s.size()) {
    if (s.compare(pos, times.size(), times) != 0) throw ParseError("expected '·'", pos);
    pos += times.size();
    out.push_back(tree());
  }
  return out;
}

// Cut enumeration: `keep` marks internal vertices in the upper part, in preorder.
// Emits the upper tree into `upper` and the cut-off trees, comma separated, into `lower`.
void split(const Tree& t, const std::vector<bool>& keep, std::size_t& idx, std::string& upper, std::string& lower) {
  if (!t.black || !keep[idx]) {
    upper += 'W';
    if (!lower.empty()) lower += ',';
    encode_tree(t, lower);
    if (t.black) idx += static_cast<std::size_t>(count_black(t));
    return;
  }
  ++idx;
  upper += "B(";
  for (std::size_t i = 0; i < t.kids.size(); ++i) {
    if (i) upper += ',';
    split(t.kids[i], keep, idx, upper, lower);
  }
  upper += ')';
}

// Parent of each internal vertex in preorder, -1 for vertices directly below a root.
void preorder_parents(const Tree& t, int parent, std::vector<int>& parents) {
  if (!t.black) return;
  int me = static_cast<int>(parents.size());
  parents.push_back(parent);
  for (const auto& k : t.kids) preorder_parents(k, me, parents);
}

// All trees with exactly `internal` black vertices and `leaves` white leaves.
const std::vector<Tree>& trees_exact(int internal, int leaves);

// All sequences of `count` trees with the given totals.
std::vector<std::vector<Tree>> sequences(int count, int internal, int leaves) {
  std::vector<std::vector<Tree>> out;
  if (count == 0) {
    if (internal == 0 && leaves == 0) out.push_back({});
    return out;
  }
  for (int i = 0; i <= internal; ++i)
    for (int l = 0; l <= leaves; ++l) {
      const auto& heads = trees_exact(i, l);
      if (heads.empty()) continue;
      auto tails = sequences(count - 1, internal - i, leaves - l);
      for (const auto& h : heads)
        for (const auto& tail : tails) {
          std::vector<Tree> s{h};
          s.insert(s.end(), tail.begin(), tail.end());
          out.push_back(std::move(s));
        }
    }
  return out;
}

const std::vector<Tree>& trees_exact(int internal, int leaves) {
  static std::map<std::pair<int, int>, std::vector<Tree>> memo;
  static std::recursive_mutex mu;
  std::lock_guard lock(mu);
  auto key = std::make_pair(internal, leaves);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<Tree> out;
  if (internal == 0) {
    if (leaves == 1) out.push_back(Tree::white());
  } else {
    // A black root with k children, each child a W or a tree containing black vertices.
    for (int k = 0; k <= internal - 1 + leaves; ++k)
      for (auto& kids : sequences(k, internal - 1, leaves)) out.push_back(Tree::node(std::move(kids)));
  }
  return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

std::string encode(const std::vector<Tree>& trees) {
  std::string out = "[";
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (i) out += ',';
    encode_tree(trees[i], out);
  }
  return out + "]";
}

std::vector<Tree> parse_trees(const std::string& text) { return TreeParser(text).forest(); }

OpForest make_forest(const std::vector<Tree>& trees) { return {encode(trees)}; }
OpForest parse_forest(const std::string& text) { return make_forest(parse_trees(text)); }
OpForest identity_forest(int n) { return make_forest(std::vector<Tree>(static_cast<std::size_t>(n), Tree::white())); }

Interfaces interfaces(const OpForest& f) {
  auto trees = parse_trees(f.code);
  int leaves = 0;
  for (const auto& t : trees) leaves += count_leaves(t);
  return {leaves, static_cast<int>(trees.size())};
}

int internal_vertices(const OpForest& f) {
  return static_cast<int>(std::count(f.code.begin(), f.code.end(), 'B'));
}

OpForest graft(const OpForest& f1, const OpForest& f2) {
  auto upper = parse_trees(f1.code);
  auto lower = parse_trees(f2.code);
  int leaves = 0;
  for (const auto& t : upper) leaves += count_leaves(t);
  if (leaves != static_cast<int>(lower.size()))
    throw NotComposable(f1.code + " (" + std::to_string(leaves) + " leaves)",
                        f2.code + " (" + std::to_string(lower.size()) + " roots)");
  std::size_t next = 0;
  std::vector<Tree> out;
  for (const auto& t : upper) out.push_back(substitute(t, lower, next));
  return make_forest(out);
}

OpForest osum(const OpForest& f1, const OpForest& f2) {
  if (f1.code == "[]") return f2;
  if (f2.code == "[]") return f1;
  return {f1.code.substr(0, f1.code.size() - 1) + "," + f2.code.substr(1)};
}

namespace {

// Cuts of a single tree as (upper tree code, comma-separated lower tree codes).
std::vector<std::pair<std::string, std::string>> tree_cuts(const Tree& t) {
  std::vector<int> parents;
  preorder_parents(t, -1, parents);
  const std::size_t n = parents.size();
  std::vector<std::pair<std::string, std::string>> out;
  std::vector<bool> keep(n);
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    if (v == n) {
      std::size_t idx = 0;
      std::string upper, lower;
      split(t, keep, idx, upper, lower);
      out.emplace_back(std::move(upper), std::move(lower));
      return;
    }
    keep[v] = false;
    visit(v + 1);
    if (parents[v] < 0 || keep[parents[v]]) {
      keep[v] = true;
      visit(v + 1);
    }
  };
  visit(0);
  return out;
}

}  // namespace

std::vector<std::pair<OpForest, OpForest>> n2_forest(const OpForest& f) {
  const auto trees = parse_trees(f.code);
  std::vector<std::vector<std::pair<std::string, std::string>>> cuts;
  std::size_t total = 1;
  for (const auto& t : trees) {
    cuts.push_back(tree_cuts(t));
    total *= cuts.back().size();
  }
  std::vector<std::pair<OpForest, OpForest>> out;
  out.reserve(total);
  std::vector<std::size_t> pick(trees.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    std::string upper = "[", lower = "[";
    for (std::size_t i = 0; i < trees.size(); ++i) {
      const auto& [u, l] = cuts[i][pick[i]];
      if (i) upper += ',';
      upper += u;
      if (!l.empty()) {
        if (lower.size() > 1) lower += ',';
        lower += l;
      }
    }
    upper += ']';
    lower += ']';
    out.emplace_back(OpForest{std::move(upper)}, OpForest{std::move(lower)});
    for (std::size_t i = trees.size(); i-- > 0;) {
      if (++pick[i] < cuts[i].size()) break;
      pick[i] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CoreForest core(const OpForest& f) {
  std::vector<std::string> parts;
  for (const auto& t : parse_trees(f.code)) {
    if (!t.black) continue;
    std::string s;
    encode_core(t, s);
    parts.push_back(std::move(s));
  }
  if (parts.empty()) return {"1"};
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "·" : "") + parts[i];
  return {out};
}

CoreForest core_product(const CoreForest& a, const CoreForest& b) {
  if (a.code == "1") return b;
  if (b.code == "1") return a;
  return {a.code + "·" + b.code};
}

CoreForest parse_core(const std::string& text) { return core(make_forest(parse_core_trees(text))); }

OpForest canonical_lift(const CoreForest& t) { return make_forest(parse_core_trees(t.code)); }

int core_size(const CoreForest& t) {
  int n = 0;
  for (std::size_t pos = t.code.find("•"); pos != std::string::npos; pos = t.code.find("•", pos + 1)) ++n;
  return n;
}

CKVec2 ck_coproduct(const CoreForest& t) {
  CKVec2 out;
  for (const auto& [g, h] : n2_forest(canonical_lift(t))) out.add_term({core(g), core(h)}, Rational(1));
  return out;
}

CKVec ck_product(const CKVec& a, const CKVec& b) {
  CKVec out;
  for (const auto& [x, c] : a)
    for (const auto& [y, d] : b) out.add_term(core_product(x, y), c * d);
  return out;
}

CKVec ck_antipode(const CoreForest& t) {
  static std::map<CoreForest, CKVec> memo;
  static std::mutex mu;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(t); it != memo.end()) return it->second;
  }
  CKVec out;
  const CoreForest one{"1"};
  if (t == one) {
    out = CKVec::basis(one);
  } else {
    out = -CKVec::basis(t);
    for (const auto& [ab, c] : ck_coproduct(t)) {
      if (ab.first == one || ab.second == one) continue;
      out -= c * ck_product(ck_antipode(ab.first), CKVec::basis(ab.second));
    }
  }
  std::lock_guard lock(mu);
  return memo.emplace(t, std::move(out)).first->second;
}

std::string render(const CKVec& v) {
  return v.render([](const CoreForest& t) { return t.code; });
}

std::string render(const CKVec2& v) {
  return v.render(tensor_renderer([](const CoreForest& t) { return t.code; }));
}

ForestCategory::Mor ForestCategory::compose(const Mor& a, const Mor& b) const { return graft(a, b); }

std::vector<ForestCategory::Mor> ForestCategory::forests(int max_internal, int max_leaves, int max_roots) const {
  std::vector<Mor> out;
  for (int i = 0; i <= max_internal; ++i)
    for (int l = 0; l <= max_leaves; ++l)
      for (int r = 0; r <= max_roots; ++r)
        for (const auto& s : sequences(r, i, l)) out.push_back(make_forest(s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CoreForest> core_forests_up_to(int n) {
  std::set<CoreForest> out;
  ForestCategory c;
  for (const auto& f : c.forests(n, 0, n)) out.insert(core(f));
  return {out.begin(), out.end()};
}

}  // namespace incat
