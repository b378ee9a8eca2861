#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "incat/free_module.hpp"

namespace incat {

/// Planar tree in term form: W is a white leaf, B(children) a black vertex.
struct Tree {
  bool black = false;
  std::vector<Tree> kids;

  static Tree white() { return {}; }
  static Tree node(std::vector<Tree> kids = {}) { return {true, std::move(kids)}; }
};

/// Operadic planar rooted forest, stored by its canonical text `[t, ...]`.
/// Each tree carries an implicit white root above it.
struct OpForest {
  std::string code;
  friend auto operator<=>(const OpForest&, const OpForest&) = default;
};

/// Forest over internal vertices only; text uses • and · with `1` for the empty forest.
struct CoreForest {
  std::string code;
  friend auto operator<=>(const CoreForest&, const CoreForest&) = default;
};

std::string encode(const std::vector<Tree>& trees);
/// Parses `[t, ...]` or `id(n)`; whitespace is ignored.
std::vector<Tree> parse_trees(const std::string& text);
OpForest make_forest(const std::vector<Tree>& trees);
OpForest parse_forest(const std::string& text);
OpForest identity_forest(int n);

struct Interfaces {
  int leaves = 0;
  int roots = 0;
  friend bool operator==(const Interfaces&, const Interfaces&) = default;
};
Interfaces interfaces(const OpForest& f);
int internal_vertices(const OpForest& f);

/// The k-th root of f2 replaces the k-th leaf of f1.
OpForest graft(const OpForest& f1, const OpForest& f2);
/// Ordered sum (concatenation of tree lists).
OpForest osum(const OpForest& f1, const OpForest& f2);
std::vector<std::pair<OpForest, OpForest>> n2_forest(const OpForest& f);

CoreForest core(const OpForest& f);
CoreForest core_product(const CoreForest& a, const CoreForest& b);
/// Trees of a core forest; parse accepts the rendered syntax.
CoreForest parse_core(const std::string& text);
/// Lift attaching one white root above each tree and no white leaves.
OpForest canonical_lift(const CoreForest& t);
int core_size(const CoreForest& t);

using CKVec = FreeVec<CoreForest>;
using CKVec2 = FreeVec2<CoreForest>;
CKVec2 ck_coproduct(const CoreForest& t);
CKVec ck_antipode(const CoreForest& t);
CKVec ck_product(const CKVec& a, const CKVec& b);
std::string render(const CKVec& v);
std::string render(const CKVec2& v);

/// The PROP of operadic planar rooted forests; objects are natural numbers.
class ForestCategory {
 public:
  using Obj = int;
  using Mor = OpForest;

  std::string name() const { return "forest"; }
  Obj source(const Mor& f) const { return interfaces(f).leaves; }
  Obj target(const Mor& f) const { return interfaces(f).roots; }
  Mor compose(const Mor& a, const Mor& b) const;
  Mor identity(Obj n) const { return identity_forest(n); }
  bool is_identity(const Mor& f) const { return internal_vertices(f) == 0; }
  std::vector<std::pair<Mor, Mor>> n2(const Mor& f) const { return n2_forest(f); }
  std::string render(const Mor& f) const { return f.code; }

  Obj unit() const { return 0; }
  Obj oproduct(Obj a, Obj b) const { return a + b; }
  Mor product(const Mor& a, const Mor& b) const { return osum(a, b); }
  std::optional<Obj> object_inverse(Obj n) const {
    if (n == 0) return 0;
    return std::nullopt;
  }

  /// All forests with the given bounds on internal vertices, leaves and roots.
  std::vector<Mor> forests(int max_internal, int max_leaves, int max_roots) const;
};

/// All core forests with at most n vertices.
std::vector<CoreForest> core_forests_up_to(int n);

}  // namespace incat
