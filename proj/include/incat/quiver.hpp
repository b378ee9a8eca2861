#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "incat/group.hpp"
#include "incat/monoidal.hpp"

namespace incat {

/// Monoidal path category of a quiver with vertex group Q0: either no arrows,
/// or exactly one arrow a -> z·a per vertex for a central z.
class QuiverCategory {
 public:
  using Obj = FiniteGroup::Elem;
  /// The path f_{z^{n-1}a} ∘ ... ∘ f_a : a -> z^n a; steps = 0 is the identity at a.
  struct Mor {
    Obj base;
    int steps;
    friend auto operator<=>(const Mor&, const Mor&) = default;
  };

  /// Throws InvariantViolation when z is not central.
  QuiverCategory(FiniteGroup q0, std::optional<Obj> z);

  std::string name() const { return z_ ? "quiver(z=" + q0_.name(*z_) + ")" : "quiver(no arrows)"; }
  const FiniteGroup& vertices() const { return q0_; }
  std::optional<Obj> central() const { return z_; }

  Obj source(const Mor& f) const { return f.base; }
  Obj target(const Mor& f) const { return power_times(f.steps, f.base); }
  Mor compose(const Mor& a, const Mor& b) const;
  Mor identity(Obj a) const { return {a, 0}; }
  bool is_identity(const Mor& f) const { return f.steps == 0; }
  std::vector<std::pair<Mor, Mor>> n2(const Mor& f) const;
  std::string render(const Mor& f) const;

  Obj unit() const { return q0_.unit(); }
  Obj oproduct(Obj a, Obj b) const { return q0_.mul(a, b); }
  Mor product(const Mor& f, const Mor& g) const { return {q0_.mul(f.base, g.base), f.steps + g.steps}; }
  std::optional<Obj> object_inverse(Obj a) const { return q0_.inv(a); }

  Mor arrow(Obj a) const;
  Mor make(Obj a, int steps) const;
  /// Literal `(a,n)` with a a vertex name.
  Mor parse(const std::string& text) const;
  /// Every path with at most max_steps arrows.
  std::vector<Mor> paths_up_to(int max_steps) const;

 private:
  Obj power_times(int n, Obj a) const;

  FiniteGroup q0_;
  std::optional<Obj> z_;
};

/// Lift statistics for two single arrows; requires z.
LiftReport quiver_ulf_failure(const QuiverCategory& q);

/// Length of products and composites is additive on the fragment.
Report check_length_grading(const QuiverCategory& q, const std::vector<QuiverCategory::Mor>& fragment);

}  // namespace incat
