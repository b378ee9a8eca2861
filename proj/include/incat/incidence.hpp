#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "incat/free_module.hpp"
#include "incat/monoidal.hpp"

namespace incat {

/// Scaled incidence bialgebra data for a monoidal instance: Δ(f) = (1/λ) Σ a⊗b
/// over N2(f), ε(f) = λ on identities and 0 elsewhere.
template <Monoidal C>
class Incidence {
 public:
  using Mor = MorOf<C>;
  using Vec = FreeVec<Mor>;
  using Vec2 = FreeVec2<Mor>;
  using Vec3 = FreeVec3<Mor>;
  using LinearMap = std::function<Vec(const Mor&)>;

  Incidence(const C& c, Rational scale) : c_(&c), scale_(std::move(scale)), n2_(c), len_(n2_) {
    if (scale_.is_zero()) throw PreconditionViolation("incidence scale must be nonzero");
  }

  const C& instance() const { return *c_; }
  const Rational& scale() const { return scale_; }
  const N2Cache<C>& decompositions() const { return n2_; }
  const LengthOracle<C>& lengths() const { return len_; }

  Vec basis(const Mor& f) const { return Vec::basis(f); }
  Vec one() const { return Vec::basis(unit_identity(*c_)); }

  Vec2 coproduct(const Mor& f) const {
    Vec2 out;
    Rational w = Rational(1) / scale_;
    for (const auto& [a, b] : n2_(f)) out.add_term({a, b}, w);
    return out;
  }
  Vec2 coproduct(const Vec& u) const {
    Vec2 out;
    for (const auto& [f, c] : u) out += c * coproduct(f);
    return out;
  }

  Rational counit(const Mor& f) const { return c_->is_identity(f) ? scale_ : Rational(0); }
  Rational counit(const Vec& u) const {
    Rational out(0);
    for (const auto& [f, c] : u) out += c * counit(f);
    return out;
  }

  Vec product(const Vec& u, const Vec& v) const {
    Vec out;
    for (const auto& [a, x] : u)
      for (const auto& [b, y] : v) out.add_term(c_->product(a, b), x * y);
    return out;
  }
  Vec2 product(const Vec2& u, const Vec2& v) const {
    Vec2 out;
    for (const auto& [a, x] : u)
      for (const auto& [b, y] : v) out.add_term({c_->product(a.first, b.first), c_->product(a.second, b.second)}, x * y);
    return out;
  }
  Vec3 product(const Vec3& u, const Vec3& v) const {
    Vec3 out;
    for (const auto& [a, x] : u)
      for (const auto& [b, y] : v)
        out.add_term({c_->product(std::get<0>(a), std::get<0>(b)), c_->product(std::get<1>(a), std::get<1>(b)),
                      c_->product(std::get<2>(a), std::get<2>(b))},
                     x * y);
    return out;
  }

  /// (Δ⊗id) and (id⊗Δ) applied to a two-fold tensor.
  Vec3 coproduct_left(const Vec2& u) const {
    Vec3 out;
    for (const auto& [ab, c] : u)
      for (const auto& [xy, d] : coproduct(ab.first)) out.add_term({xy.first, xy.second, ab.second}, c * d);
    return out;
  }
  Vec3 coproduct_right(const Vec2& u) const {
    Vec3 out;
    for (const auto& [ab, c] : u)
      for (const auto& [xy, d] : coproduct(ab.second)) out.add_term({ab.first, xy.first, xy.second}, c * d);
    return out;
  }

  /// (ε⊗id) and (id⊗ε).
  Vec counit_left(const Vec2& u) const {
    Vec out;
    for (const auto& [ab, c] : u) out.add_term(ab.second, c * counit(ab.first));
    return out;
  }
  Vec counit_right(const Vec2& u) const {
    Vec out;
    for (const auto& [ab, c] : u) out.add_term(ab.first, c * counit(ab.second));
    return out;
  }

  /// (F*G)(f) = Σ over Δ(f) of F(a)·G(b), scale included through Δ.
  LinearMap convolve(LinearMap F, LinearMap G) const {
    return [this, F = std::move(F), G = std::move(G)](const Mor& f) {
      Vec out;
      for (const auto& [ab, c] : coproduct(f)) out += c * product(F(ab.first), G(ab.second));
      return out;
    };
  }

  LinearMap identity_map() const {
    return [](const Mor& f) { return Vec::basis(f); };
  }
  /// u∘ε: f ↦ ε(f) i₁.
  LinearMap unit_counit() const {
    return [this](const Mor& f) { return counit(f) * one(); };
  }

  static Vec apply(const LinearMap& F, const Vec& u) {
    Vec out;
    for (const auto& [f, c] : u) out += c * F(f);
    return out;
  }

  /// Quotient by the ideal generated by i_x - i_1.
  Vec collapse_identities(const Vec& u) const {
    Vec out;
    const Mor one_mor = unit_identity(*c_);
    for (const auto& [f, c] : u) out.add_term(c_->is_identity(f) ? one_mor : f, c);
    return out;
  }
  Vec2 collapse_identities(const Vec2& u) const {
    Vec2 out;
    const Mor one_mor = unit_identity(*c_);
    auto col = [&](const Mor& f) { return c_->is_identity(f) ? one_mor : f; };
    for (const auto& [ab, c] : u) out.add_term({col(ab.first), col(ab.second)}, c);
    return out;
  }

  std::string render(const Vec& u) const {
    return u.render([this](const Mor& f) { return c_->render(f); });
  }
  std::string render(const Vec2& u) const {
    return u.render(tensor_renderer([this](const Mor& f) { return c_->render(f); }));
  }
  std::string render(const Vec3& u) const {
    return u.render(tensor_renderer([this](const Mor& f) { return c_->render(f); }));
  }

 private:
  const C* c_;
  Rational scale_;
  N2Cache<C> n2_;
  LengthOracle<C> len_;
};

/// Convolution inverse of the identity, computed by recursion on length.
/// Requires λ = 1, a group of objects, and a combinatorial instance.
template <HasObjectInverse C>
class CombinatorialAntipode {
 public:
  using Mor = MorOf<C>;
  using Vec = FreeVec<Mor>;

  explicit CombinatorialAntipode(const Incidence<C>& inc) : inc_(&inc) {
    if (!inc.scale().is_one()) throw PreconditionViolation("antipode recursion needs scale 1");
  }

  Vec operator()(const Mor& f) const {
    std::lock_guard lock(mu_);
    return eval(f, 0);
  }

 private:
  typename C::Obj inverse(const typename C::Obj& x) const {
    auto inv = inc_->instance().object_inverse(x);
    if (!inv) throw PreconditionViolation("object " + inc_->instance().render(inc_->instance().identity(x)) +
                                          " has no inverse under the object product");
    return *inv;
  }

  Vec eval(const Mor& f, std::size_t depth) const {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    if (depth > 4096) throw Divergence("antipode recursion too deep");
    const auto& c = inc_->instance();
    Vec out;
    if (c.is_identity(f)) {
      out = Vec::basis(c.identity(inverse(c.source(f))));
    } else {
      const auto x_inv = Vec::basis(c.identity(inverse(c.source(f))));
      const auto y_inv = Vec::basis(c.identity(inverse(c.target(f))));
      Vec sum = inc_->product(y_inv, Vec::basis(f));
      for (const auto& [a, b] : inc_->decompositions()(f)) {
        if (a == f || c.is_identity(a)) continue;
        sum += inc_->product(eval(a, depth + 1), Vec::basis(b));
      }
      out = -inc_->product(sum, x_inv);
    }
    memo_.emplace(f, out);
    return out;
  }

  const Incidence<C>* inc_;
  mutable std::mutex mu_;
  mutable std::map<Mor, Vec> memo_;
};

// ---------------------------------------------------------------------------
// Verification suites

/// Coassociativity and both counit laws.
template <Monoidal C>
Report check_coalgebra(const Incidence<C>& inc, const std::vector<MorOf<C>>& sample, Exec exec = Exec::Parallel) {
  const C& c = inc.instance();
  Report report(c.name() + ": coalgebra axioms (scale " + inc.scale().to_string() + ")");
  for (const auto& f : sample) inc.coproduct(f);  // deterministic warm-up of the cache
  detail::collect<C>(report, sample.size(), [&](std::size_t i) {
    const auto& f = sample[i];
    std::vector<Finding> out;
    std::string name = c.render(f);
    try {
      auto d = inc.coproduct(f);
      auto l = inc.coproduct_left(d);
      auto r = inc.coproduct_right(d);
      out.push_back({"coassociativity", name, l == r, l == r ? "" : inc.render(l - r)});
      auto e1 = inc.counit_left(d);
      auto e2 = inc.counit_right(d);
      out.push_back({"left counit", name, e1 == inc.basis(f), e1 == inc.basis(f) ? "" : inc.render(e1)});
      out.push_back({"right counit", name, e2 == inc.basis(f), e2 == inc.basis(f) ? "" : inc.render(e2)});
    } catch (const Error& e) {
      out.push_back({"coassociativity", name, false, e.what()});
    }
    return out;
  }, exec);
  return report;
}

/// Which product pairs a multiplicativity check visits.
enum class PairScope { AllPairs, ProductInSample };

/// Bialgebra axioms of a combinatorial instance, plus the length-filtration proxy for pointedness.
template <Monoidal C>
Report check_bialgebra(const Incidence<C>& inc, const std::vector<MorOf<C>>& sample,
                       PairScope scope = PairScope::AllPairs, Exec exec = Exec::Parallel) {
  const C& c = inc.instance();
  Report report(c.name() + ": bialgebra axioms");
  if (!inc.scale().is_one()) report.add("scale is 1", inc.scale().to_string(), false);
  report.merge(check_coalgebra(inc, sample, exec));
  const auto one = unit_identity(c);
  {
    auto d1 = inc.coproduct(one);
    typename Incidence<C>::Vec2 expect;
    expect.add_term({one, one}, Rational(1));
    report.add("unit is grouplike", c.render(one), d1 == expect, d1 == expect ? "" : inc.render(d1));
  }
  std::set<MorOf<C>> members(sample.begin(), sample.end());
  for (const auto& f : sample) inc.lengths()(f);
  detail::collect<C>(report, sample.size(), [&](std::size_t i) {
    const auto& f = sample[i];
    std::vector<Finding> out;
    std::string name = c.render(f);
    std::string dwit, ewit;
    std::size_t pairs = 0;
    for (const auto& g : sample) {
      auto fg = c.product(f, g);
      if (scope == PairScope::ProductInSample && !members.count(fg)) continue;
      ++pairs;
      if (dwit.empty()) {
        auto lhs = inc.coproduct(fg);
        auto rhs = inc.product(inc.coproduct(f), inc.coproduct(g));
        if (!(lhs == rhs)) dwit = "g = " + c.render(g) + ": difference " + inc.render(lhs - rhs);
      }
      if (ewit.empty() && !(inc.counit(fg) == inc.counit(f) * inc.counit(g))) ewit = "g = " + c.render(g);
    }
    out.push_back({"coproduct multiplicative", name, dwit.empty(),
                   dwit.empty() ? std::to_string(pairs) + " partners" : dwit});
    out.push_back({"counit multiplicative", name, ewit.empty(), ewit});
    Length lf = inc.lengths()(f);
    std::string pwit;
    for (const auto& [a, b] : inc.decompositions()(f))
      if (!(inc.lengths()(a) + inc.lengths()(b) <= lf)) {
        pwit = detail::render_pair(c, a, b) + " exceeds length " + lf.to_string();
        break;
      }
    out.push_back({"length filtration", name, pwit.empty(), pwit});
    return out;
  }, exec);
  return report;
}

/// Hopf property of the combinatorial antipode: S*id = uε = id*S.
template <HasObjectInverse C>
Report check_antipode(const Incidence<C>& inc, const CombinatorialAntipode<C>& S, const std::vector<MorOf<C>>& sample) {
  const C& c = inc.instance();
  Report report(c.name() + ": antipode");
  auto sf = [&](const MorOf<C>& f) { return S(f); };
  auto left = inc.convolve(sf, inc.identity_map());
  auto right = inc.convolve(inc.identity_map(), sf);
  auto ue = inc.unit_counit();
  for (const auto& f : sample) {
    auto l = left(f), r = right(f), e = ue(f);
    report.add("S*id = unit counit", c.render(f), l == e, l == e ? "" : inc.render(l));
    report.add("id*S = unit counit", c.render(f), r == e, r == e ? "" : inc.render(r));
  }
  return report;
}

/// Weak Hopf axioms (A1)-(A6) on a finite sample closed under the structure maps.
/// The antipode identities are evaluated in the form
///   S(a1) a2 = 1_1 ε(a 1_2),  a1 S(a2) = ε(1_1 a) 1_2,  S(a1) a2 S(a3) = S(a).
template <Monoidal C>
Report check_weak_hopf(const Incidence<C>& inc, const std::function<MorOf<C>(const MorOf<C>&)>& antipode,
                       const std::vector<MorOf<C>>& sample, Exec exec = Exec::Parallel) {
  using Vec = typename Incidence<C>::Vec;
  using Vec2 = typename Incidence<C>::Vec2;
  using Vec3 = typename Incidence<C>::Vec3;
  const C& c = inc.instance();
  Report report(c.name() + ": weak Hopf axioms (scale " + inc.scale().to_string() + ")");
  const auto one = unit_identity(c);
  const Vec one_v = inc.one();
  const Vec2 d1 = inc.coproduct(one);
  for (const auto& f : sample) inc.coproduct(f);

  // (A1)
  detail::collect<C>(report, sample.size(), [&](std::size_t i) {
    const auto& a = sample[i];
    std::vector<Finding> out;
    bool assoc = true;
    for (const auto& b : sample)
      for (const auto& d : sample)
        if (!(c.product(c.product(a, b), d) == c.product(a, c.product(b, d)))) assoc = false;
    out.push_back({"A1 associative", c.render(a), assoc, {}});
    out.push_back({"A1 unital", c.render(a), c.product(one, a) == a && c.product(a, one) == a, {}});
    return out;
  }, exec);

  // (A2)
  report.merge(check_coalgebra(inc, sample, exec));

  // (A3), (A4)
  detail::collect<C>(report, sample.size(), [&](std::size_t i) {
    const auto& a = sample[i];
    std::vector<Finding> out;
    std::string w3, w4a, w4b;
    for (const auto& b : sample) {
      auto ab = c.product(a, b);
      if (w3.empty() && !(inc.coproduct(ab) == inc.product(inc.coproduct(a), inc.coproduct(b))))
        w3 = "b = " + c.render(b);
      Rational lhs = inc.counit(ab), first(0), second(0);
      for (const auto& [xy, k] : d1) {
        first += k * inc.counit(c.product(a, xy.first)) * inc.counit(c.product(xy.second, b));
        second += k * inc.counit(c.product(a, xy.second)) * inc.counit(c.product(xy.first, b));
      }
      if (w4a.empty() && !(lhs == first)) w4a = "b = " + c.render(b) + ": " + lhs.to_string() + " vs " + first.to_string();
      if (w4b.empty() && !(lhs == second)) w4b = "b = " + c.render(b) + ": " + lhs.to_string() + " vs " + second.to_string();
    }
    out.push_back({"A3 coproduct multiplicative", c.render(a), w3.empty(), w3});
    out.push_back({"A4 counit weakly multiplicative (1_1 order)", c.render(a), w4a.empty(), w4a});
    out.push_back({"A4 counit weakly multiplicative (1_2 order)", c.render(a), w4b.empty(), w4b});
    return out;
  }, exec);

  // (A5)
  {
    Vec3 left, right, middle = inc.coproduct_left(d1);
    Vec3 d1_one, one_d1;
    for (const auto& [xy, k] : d1) {
      d1_one.add_term({xy.first, xy.second, one}, k);
      one_d1.add_term({one, xy.first, xy.second}, k);
    }
    left = inc.product(d1_one, one_d1);
    right = inc.product(one_d1, d1_one);
    report.add("A5 (D1 x 1)(1 x D1) = D2(1)", c.render(one), left == middle, left == middle ? "" : inc.render(left - middle));
    report.add("A5 (1 x D1)(D1 x 1) = D2(1)", c.render(one), right == middle, right == middle ? "" : inc.render(right - middle));
  }

  // (A6)
  auto S = [&](const MorOf<C>& f) { return Vec::basis(antipode(f)); };
  detail::collect<C>(report, sample.size(), [&](std::size_t i) {
    const auto& a = sample[i];
    std::vector<Finding> out;
    const Vec av = Vec::basis(a);
    const Vec2 da = inc.coproduct(a);
    Vec sl, sr, twice;
    for (const auto& [xy, k] : da) {
      sl += k * inc.product(S(xy.first), Vec::basis(xy.second));
      sr += k * inc.product(Vec::basis(xy.first), S(xy.second));
      for (const auto& [uv, k2] : inc.coproduct(xy.second))
        twice += (k * k2) * inc.product(inc.product(S(xy.first), Vec::basis(uv.first)), S(uv.second));
    }
    Vec source_side, target_side;
    for (const auto& [xy, k] : d1) {
      source_side += (k * inc.counit(inc.product(av, Vec::basis(xy.second)))) * Vec::basis(xy.first);
      target_side += (k * inc.counit(inc.product(Vec::basis(xy.first), av))) * Vec::basis(xy.second);
    }
    out.push_back({"A6 S(a1)a2 = 1_1 e(a 1_2)", c.render(a), sl == source_side, sl == source_side ? "" : inc.render(sl)});
    out.push_back({"A6 a1 S(a2) = e(1_1 a) 1_2", c.render(a), sr == target_side, sr == target_side ? "" : inc.render(sr)});
    out.push_back({"A6 S(a1) a2 S(a3) = S(a)", c.render(a), twice == S(a), twice == S(a) ? "" : inc.render(twice)});
    return out;
  }, exec);
  return report;
}

}  // namespace incat
