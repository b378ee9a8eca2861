#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "incat/free_module.hpp"

namespace incat {

/// One class of the link partition: inner names, outer names and the vertex of each port.
struct Link {
  std::vector<int> inner;
  std::vector<int> outer;
  std::vector<int> ports;
  friend auto operator<=>(const Link&, const Link&) = default;
};

/// Bigraph in support-quotient form. A parent code p >= 0 names vertex p and
/// p < 0 names root -(p+1). Ports are anonymous: a port is its vertex inside
/// its link class, so relabeling ports is built in.
struct Bigraph {
  int roots = 0;
  int sites = 0;
  int inner = 0;
  int outer = 0;
  std::vector<int> vpar;
  std::vector<std::string> labels;
  std::vector<int> spar;
  std::vector<Link> links;
  friend auto operator<=>(const Bigraph&, const Bigraph&) = default;

  int vertices() const { return static_cast<int>(vpar.size()); }
  int ports() const;
};

constexpr int root_code(int r) { return -(r + 1); }
constexpr bool is_root_code(int p) { return p < 0; }
constexpr int root_index(int p) { return -p - 1; }

struct Interface {
  int places = 0;
  int names = 0;
  friend auto operator<=>(const Interface&, const Interface&) = default;
};

/// First violated bigraph invariant, if any.
std::optional<std::string> violation(const Bigraph& g);
/// Sorts classes and throws InvariantViolation on an invalid bigraph.
Bigraph validated(Bigraph g);

/// Representative of the support-equivalence class: the least relabeling over
/// vertex orders compatible with an isomorphism-invariant vertex coloring.
Bigraph canonical_form(const Bigraph& g);
/// Brute-force search for a vertex bijection carrying a onto b.
bool support_isomorphic(const Bigraph& a, const Bigraph& b);
/// Relabels vertex v as pos[v]; the result is normalized but not canonical.
Bigraph relabel(const Bigraph& g, const std::vector<int>& pos);

Bigraph bigraph_identity(int places, int names);
/// g ∘ f; throws NotComposable unless inner(g) = outer(f).
Bigraph compose(const Bigraph& g, const Bigraph& f);
/// Ordered union f · g.
Bigraph product(const Bigraph& f, const Bigraph& g);

/// Literal grammar, whitespace ignored:
///   bigraph{roots=R; sites=S; inner=X; outer=Y; vertices=N;
///           prnt=[v0:r0, s0:v0, ...]; ports=[p0:v0, ...];
///           classes=[{x0,p0,y1}, ...]; labels=[v0:A, ...]}
/// Every vertex and site must appear in prnt; ports, classes, labels and vertices are optional.
Bigraph parse_bigraph(const std::string& text);
std::string render_bigraph(const Bigraph& g);

struct N2Options {
  std::size_t limit = 2'000'000;  // candidate factorizations before EnumerationBound
};

/// Reduced factorizations f = a ∘ b as canonical pairs (a, b): no two middle
/// names are linked both in a and in b. Middle names take every order, so a
/// factorization through k names contributes its k! relabelings.
std::vector<std::pair<Bigraph, Bigraph>> n2_bigraph(const Bigraph& f, const N2Options& options = {});

/// True when no two middle names of the pair are linked on both sides.
bool is_reduced(const Bigraph& upper, const Bigraph& lower);

class BigraphCategory {
 public:
  using Obj = Interface;
  using Mor = Bigraph;

  explicit BigraphCategory(N2Options options = {}) : options_(options) {}

  std::string name() const { return "bigraph"; }
  const N2Options& options() const { return options_; }

  Obj source(const Mor& f) const { return {f.sites, f.inner}; }
  Obj target(const Mor& f) const { return {f.roots, f.outer}; }
  Mor compose(const Mor& a, const Mor& b) const { return canonical_form(incat::compose(a, b)); }
  Mor identity(const Obj& i) const { return bigraph_identity(i.places, i.names); }
  bool is_identity(const Mor& f) const { return f == identity(source(f)); }
  std::vector<std::pair<Mor, Mor>> n2(const Mor& f) const { return n2_bigraph(f, options_); }
  std::string render(const Mor& f) const { return render_bigraph(f); }

  Obj unit() const { return {}; }
  Obj oproduct(const Obj& a, const Obj& b) const { return {a.places + b.places, a.names + b.names}; }
  Mor product(const Mor& a, const Mor& b) const { return canonical_form(incat::product(a, b)); }
  std::optional<Obj> object_inverse(const Obj& i) const {
    if (i == Obj{}) return Obj{};
    return std::nullopt;
  }

  Mor parse(const std::string& text) const { return canonical_form(parse_bigraph(text)); }

 private:
  N2Options options_;
};

struct BigraphBounds {
  int max_vertices = 2;
  int max_ports = 2;
  int max_roots = 2;
  int max_sites = 2;
  int max_inner = 2;
  int max_outer = 2;
  std::vector<std::string> labels{""};
};

/// Every valid bigraph within the bounds, canonical and sorted.
std::vector<Bigraph> bigraph_fragment(const BigraphBounds& bounds);

/// Rewrites two sibling vertices labelled `first` and `second` directly under
/// one root into a single vertex labelled `merged` that keeps their contents and ports.
struct ReactionRule {
  std::string first = "A";
  std::string second = "B";
  std::string merged = "C";
};

/// r(g): the first matching sibling pair is rewritten; otherwise g is returned.
Bigraph apply_rule(const ReactionRule& rule, const Bigraph& g);

/// Context gathering k places under one root, identity on names.
Bigraph merge_context(int places, int names);

struct BlockedReaction {
  Bigraph upper;
  Bigraph lower;
  int context_places = 0;  // 1 is the identity context
  Bigraph reacted;         // r(M ∘ lower)
};

/// Terms a ⊗ r(M ∘ b) of (id ⊗ r M∘)Δ(g) where r acts, for merge contexts with at most `depth` places.
std::vector<BlockedReaction> blocked_reaction_terms(const ReactionRule& rule, const Bigraph& g, int depth,
                                                   const N2Options& options = {});
FreeVec2<Bigraph> blocked_reactions(const ReactionRule& rule, const Bigraph& g, int depth,
                                    const N2Options& options = {});

}  // namespace incat
