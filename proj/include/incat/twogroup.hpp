#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "incat/group.hpp"
#include "incat/rational.hpp"

namespace incat {

/// (G, H, τ, α): τ: H -> G a homomorphism, α: G × H -> H an action by
/// automorphisms, with τ(α(g,h)) = g τ(h) g⁻¹ and α(τ(h), h') = h h' h⁻¹.
struct CrossedModule {
  using Elem = FiniteGroup::Elem;
  FiniteGroup G;
  FiniteGroup H;
  std::vector<Elem> tau;                 // indexed by H
  std::vector<std::vector<Elem>> alpha;  // alpha[g][h]
  std::string label = "xmod";
};

/// Checks every axiom exhaustively; throws InvariantViolation with a witness.
CrossedModule validate_crossed_module(FiniteGroup G, FiniteGroup H, std::vector<CrossedModule::Elem> tau,
                                      std::vector<std::vector<CrossedModule::Elem>> alpha, std::string label = "xmod");

/// (G, N, inclusion, conjugation); throws InvariantViolation if N is not normal.
CrossedModule normal_subgroup_xmod(const FiniteGroup& G, const std::vector<CrossedModule::Elem>& N,
                                   std::string label = "normal");

/// The automorphism 2-group of G as the crossed module (Aut(G), Inn(G), inclusion, conjugation).
CrossedModule aut_two_group(const FiniteGroup& G, std::string label = "aut");

/// Strict 2-group of a crossed module: morphisms (h, g): g -> τ(h)g.
class TwoGroupCategory {
 public:
  using Obj = CrossedModule::Elem;
  struct Mor {
    CrossedModule::Elem h;
    CrossedModule::Elem g;
    friend auto operator<=>(const Mor&, const Mor&) = default;
  };

  explicit TwoGroupCategory(CrossedModule xm) : xm_(std::move(xm)) {}

  std::string name() const { return xm_.label; }
  const CrossedModule& xmod() const { return xm_; }

  Obj source(const Mor& f) const { return f.g; }
  Obj target(const Mor& f) const { return xm_.G.mul(xm_.tau[f.h], f.g); }
  /// (h', τ(h)g) ∘ (h, g) = (h'h, g).
  Mor compose(const Mor& a, const Mor& b) const;
  Mor identity(Obj g) const { return {xm_.H.unit(), g}; }
  bool is_identity(const Mor& f) const { return f.h == xm_.H.unit(); }
  /// Groupoid decompositions: one pair per morphism b with the source of f.
  std::vector<std::pair<Mor, Mor>> n2(const Mor& f) const;
  std::string render(const Mor& f) const { return "(" + xm_.H.name(f.h) + "," + xm_.G.name(f.g) + ")"; }

  Obj unit() const { return xm_.G.unit(); }
  Obj oproduct(Obj a, Obj b) const { return xm_.G.mul(a, b); }
  /// (h,g)·(h',g') = (h α(g,h'), g g').
  Mor product(const Mor& a, const Mor& b) const {
    return {xm_.H.mul(a.h, xm_.alpha[a.g][b.h]), xm_.G.mul(a.g, b.g)};
  }
  std::optional<Obj> object_inverse(Obj g) const { return xm_.G.inv(g); }

  /// Inverse under composition.
  Mor inverse(const Mor& f) const { return {xm_.H.inv(f.h), target(f)}; }
  Mor parse(const std::string& text) const;
  std::vector<Obj> objects() const;
  std::vector<Mor> morphisms() const;

 private:
  CrossedModule xm_;
};

/// Morphisms with source the unit object.
std::vector<TwoGroupCategory::Mor> source_subgroup(const TwoGroupCategory& c);

/// f̄ = i_{t(f)⁻¹} · f⁻¹ · i_{s(f)⁻¹}.
TwoGroupCategory::Mor monoidal_inverse(const TwoGroupCategory& c, const TwoGroupCategory::Mor& f);

/// Antipode S(f) = f̄⁻¹ of the weak Hopf structure.
TwoGroupCategory::Mor theorem_antipode(const TwoGroupCategory& c, const TwoGroupCategory::Mor& f);

/// Closed formula (α(g⁻¹,h⁻¹)⁻¹, g⁻¹) as printed for crossed modules.
TwoGroupCategory::Mor corollary_antipode(const TwoGroupCategory& c, const TwoGroupCategory::Mor& f);

/// Indexed-sum coproduct without scale. With `printed` the sum runs over
/// h'h'' = h as displayed, otherwise over h''h' = h so each term composes to f.
std::vector<std::pair<TwoGroupCategory::Mor, TwoGroupCategory::Mor>> corollary_coproduct_terms(
    const TwoGroupCategory& c, const TwoGroupCategory::Mor& f, bool printed);

/// Crossed module (Ob, S, t, i_g · h · i_{g⁻¹}) of a 2-group.
CrossedModule xmod_from_two_group(const TwoGroupCategory& c);

/// Structural isomorphism test between crossed modules: bijections of G and H
/// that are homomorphisms commuting with τ and α.
bool xmod_isomorphic(const CrossedModule& a, const CrossedModule& b);

struct WeakHopfData {
  Rational scale;
  std::function<TwoGroupCategory::Mor(const TwoGroupCategory::Mor&)> antipode;
};

/// λ = |H| and the antipode f̄⁻¹.
WeakHopfData weak_hopf_structure(const TwoGroupCategory& c);

}  // namespace incat
