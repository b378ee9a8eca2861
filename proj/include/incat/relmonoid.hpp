#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "incat/group.hpp"

namespace incat {

/// Reflexive, transitive relation on a finite monoid, compatible with the product.
class Relation {
 public:
  using Elem = FiniteMonoid::Elem;

  static Relation equality(int n);
  static Relation full(int n);
  /// Reflexive-transitive closure of the given pairs (x ≼ y listed as {x, y}).
  static Relation closure(int n, const std::vector<std::pair<Elem, Elem>>& pairs);
  /// Exactly the listed pairs; validation happens in the category constructor.
  static Relation literal(int n, std::vector<std::pair<Elem, Elem>> pairs);

  int size() const { return n_; }
  bool related(Elem x, Elem y) const { return pairs_.count({x, y}) > 0; }
  const std::set<std::pair<Elem, Elem>>& pairs() const { return pairs_; }

 private:
  int n_ = 0;
  std::set<std::pair<Elem, Elem>> pairs_;
};

/// The category C_M: one morphism (x, y): y -> x for each x ≼ y.
class RelMonoidCategory {
 public:
  using Obj = FiniteMonoid::Elem;
  struct Mor {
    Obj lower;
    Obj upper;
    friend auto operator<=>(const Mor&, const Mor&) = default;
  };

  /// Throws InvariantViolation naming the failing element or triple.
  RelMonoidCategory(FiniteMonoid monoid, Relation relation, std::string label = "relmonoid");

  std::string name() const { return label_; }
  const FiniteMonoid& monoid() const { return m_; }
  const Relation& relation() const { return r_; }

  Obj source(const Mor& f) const { return f.upper; }
  Obj target(const Mor& f) const { return f.lower; }
  Mor compose(const Mor& a, const Mor& b) const;
  Mor identity(Obj x) const { return {x, x}; }
  bool is_identity(const Mor& f) const { return f.lower == f.upper; }
  std::vector<std::pair<Mor, Mor>> n2(const Mor& f) const;
  std::string render(const Mor& f) const;

  Obj unit() const { return m_.unit(); }
  Obj oproduct(Obj x, Obj y) const { return m_.mul(x, y); }
  Mor product(const Mor& f, const Mor& g) const { return {m_.mul(f.lower, g.lower), m_.mul(f.upper, g.upper)}; }
  std::optional<Obj> object_inverse(Obj x) const { return m_.inverse(x); }

  /// [x, y] = {z : x ≼ z ≼ y}.
  std::vector<Obj> interval(Obj x, Obj y) const;
  bool is_equivalence() const;

  Mor make(Obj lower, Obj upper) const;
  std::optional<Mor> parse(const std::string& text) const;
  std::vector<Obj> objects() const;
  std::vector<Mor> morphisms() const;

 private:
  FiniteMonoid m_;
  Relation r_;
  std::string label_;
};

/// Free monoid on a finite alphabet with words related when they have equal
/// length (or only when equal, for the discrete variant).
class FreeMonoidCategory {
 public:
  enum class Kind { EqualLength, Equality };
  using Obj = std::string;
  struct Mor {
    std::string lower;
    std::string upper;
    friend auto operator<=>(const Mor&, const Mor&) = default;
  };

  explicit FreeMonoidCategory(std::string alphabet = "xy", Kind kind = Kind::EqualLength);

  std::string name() const { return kind_ == Kind::EqualLength ? "monex" : "free-discrete"; }
  const std::string& alphabet() const { return alphabet_; }
  Kind kind() const { return kind_; }

  Obj source(const Mor& f) const { return f.upper; }
  Obj target(const Mor& f) const { return f.lower; }
  Mor compose(const Mor& a, const Mor& b) const;
  Mor identity(const Obj& x) const { return {x, x}; }
  bool is_identity(const Mor& f) const { return f.lower == f.upper; }
  std::vector<std::pair<Mor, Mor>> n2(const Mor& f) const;
  std::string render(const Mor& f) const;

  Obj unit() const { return {}; }
  Obj oproduct(const Obj& x, const Obj& y) const { return x + y; }
  Mor product(const Mor& f, const Mor& g) const { return {f.lower + g.lower, f.upper + g.upper}; }
  std::optional<Obj> object_inverse(const Obj& x) const {
    if (x.empty()) return Obj{};
    return std::nullopt;
  }

  bool related(const Obj& x, const Obj& y) const;
  /// [x, y]; for the equal-length relation all words of that length.
  std::vector<Obj> interval(const Obj& x, const Obj& y) const;
  Mor make(const Obj& lower, const Obj& upper) const;
  /// Literal `(u,v)` with `1` or an empty field for the empty word.
  Mor parse(const std::string& text) const;

  std::vector<Obj> words(std::size_t length) const;
  std::vector<Obj> words_up_to(std::size_t max_length) const;
  std::vector<Mor> morphisms_up_to(std::size_t max_length) const;

 private:
  std::string alphabet_;
  Kind kind_;
};

}  // namespace incat
