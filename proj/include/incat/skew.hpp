#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace incat {

/// A lattice path as a word over {0,1}; 1 is a step up.
using LatticePath = std::string;

struct PathStats {
  int height = 0;
  int width = 0;
  friend bool operator==(const PathStats&, const PathStats&) = default;
};

PathStats path_stats(const LatticePath& p);
bool is_path(const std::string& s);

enum class Dominance { NotComparable, Leq, Lt };

/// Compares prefix sums of q and p. Lt requires strict inequality at every
/// proper prefix and q != p. Throws PreconditionViolation on mismatched stats.
Dominance dominates(const LatticePath& q, const LatticePath& p);

/// All paths of the given height and width, in lexicographic order.
std::vector<LatticePath> paths_with(int height, int width);

/// Category of skew shapes: (q, p) is a morphism q -> p when q ≤ p.
class SkewCategory {
 public:
  using Obj = LatticePath;
  struct Mor {
    LatticePath lower;
    LatticePath upper;
    friend auto operator<=>(const Mor&, const Mor&) = default;
  };

  std::string name() const { return "skew"; }

  Obj source(const Mor& f) const { return f.lower; }
  Obj target(const Mor& f) const { return f.upper; }
  /// (q,p)∘(r,q) = (r,p).
  Mor compose(const Mor& a, const Mor& b) const;
  Mor identity(const Obj& p) const { return {p, p}; }
  bool is_identity(const Mor& f) const { return f.lower == f.upper; }
  std::vector<std::pair<Mor, Mor>> n2(const Mor& f) const;
  std::string render(const Mor& f) const { return "skew(" + f.lower + "," + f.upper + ")"; }

  Obj unit() const { return {}; }
  Obj oproduct(const Obj& a, const Obj& b) const { return a + b; }
  Mor product(const Mor& a, const Mor& b) const { return {a.lower + b.lower, a.upper + b.upper}; }
  std::optional<Obj> object_inverse(const Obj& p) const {
    if (p.empty()) return Obj{};
    return std::nullopt;
  }

  /// Validated constructor.
  Mor make(const LatticePath& lower, const LatticePath& upper) const;
  /// Literal `skew(q,p)`.
  Mor parse(const std::string& text) const;

  /// Unique factorization into connected shapes; cuts sit at the proper
  /// prefixes where the partial sums of lower and upper agree.
  std::vector<Mor> connected_factorization(const Mor& f) const;
  bool is_connected(const Mor& f) const { return connected_factorization(f).size() == 1; }

  /// Every skew shape of length at most n.
  std::vector<Mor> shapes_up_to(int n) const;
};

}  // namespace incat
