#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace incat {

/// Finite monoid given by a full multiplication table over element indices.
class FiniteMonoid {
 public:
  using Elem = int;
  using Table = std::vector<std::vector<Elem>>;

  /// Validates closure, associativity and the unit laws.
  FiniteMonoid(Table table, Elem unit, std::vector<std::string> names = {});

  int size() const { return static_cast<int>(table_.size()); }
  Elem unit() const { return unit_; }
  Elem mul(Elem a, Elem b) const { return table_[a][b]; }
  const Table& table() const { return table_; }
  const std::string& name(Elem a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Elem> find(const std::string& name) const;

  std::optional<Elem> inverse(Elem a) const;
  bool is_group() const;
  bool is_central(Elem z) const;

  /// Z/n with elements 0..n-1 under addition.
  static FiniteMonoid cyclic(int n);
  /// {0..n-1} under max; the unit is 0.
  static FiniteMonoid max_chain(int n);

 protected:
  Table table_;
  Elem unit_;
  std::vector<std::string> names_;
};

using Permutation = std::vector<int>;

/// Finite group; construction fails unless every element is invertible.
class FiniteGroup : public FiniteMonoid {
 public:
  FiniteGroup(Table table, Elem unit, std::vector<std::string> names = {});
  explicit FiniteGroup(const FiniteMonoid& m) : FiniteGroup(m.table(), m.unit(), m.names()) {}

  Elem inv(Elem a) const { return inverses_[a]; }
  Elem conj(Elem g, Elem h) const { return mul(mul(g, h), inv(g)); }  // g h g^-1
  bool is_normal(const std::vector<Elem>& subset) const;
  bool is_subgroup(const std::vector<Elem>& subset) const;
  std::vector<Elem> center() const;

  /// Closure of permutation generators; permutations act on 0..degree-1 and
  /// compose as functions, (p*q)(i) = p(q(i)).
  static FiniteGroup from_permutations(const std::vector<Permutation>& generators, int degree);
  static FiniteGroup symmetric(int degree);
  static FiniteGroup alternating(int degree);
  static FiniteGroup cyclic_group(int n) { return FiniteGroup(FiniteMonoid::cyclic(n)); }

  /// Group elements of a permutation-built group, if available.
  const std::vector<Permutation>& permutations() const { return perms_; }

 private:
  std::vector<Elem> inverses_;
  std::vector<Permutation> perms_;
};

/// Restriction of a group to a subgroup given by element indices (in the listed order).
FiniteGroup subgroup(const FiniteGroup& g, const std::vector<FiniteMonoid::Elem>& elements);

/// All automorphisms of g, each as the image list of g's elements, sorted.
std::vector<std::vector<FiniteMonoid::Elem>> automorphisms(const FiniteGroup& g);

/// Cycle notation, "e" for the identity.
std::string cycle_notation(const Permutation& p);

}  // namespace incat
