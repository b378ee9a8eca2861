#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "incat/error.hpp"
#include "incat/parallel.hpp"
#include "incat/report.hpp"

namespace incat {

template <class C>
concept Category = requires(const C& c, const typename C::Mor& m, const typename C::Obj& x) {
  typename C::Obj;
  typename C::Mor;
  { c.source(m) } -> std::convertible_to<typename C::Obj>;
  { c.target(m) } -> std::convertible_to<typename C::Obj>;
  { c.compose(m, m) } -> std::convertible_to<typename C::Mor>;
  { c.identity(x) } -> std::convertible_to<typename C::Mor>;
  { c.is_identity(m) } -> std::same_as<bool>;
  { c.n2(m) } -> std::convertible_to<std::vector<std::pair<typename C::Mor, typename C::Mor>>>;
  { c.render(m) } -> std::convertible_to<std::string>;
  { c.name() } -> std::convertible_to<std::string>;
} && std::totally_ordered<typename C::Mor> && std::totally_ordered<typename C::Obj>;

template <Category C>
using MorOf = typename C::Mor;
template <Category C>
using ObjOf = typename C::Obj;
template <Category C>
using Decomps = std::vector<std::pair<MorOf<C>, MorOf<C>>>;

/// Length of a morphism; `infinite` is set when decompositions can be pumped.
struct Length {
  std::size_t value = 0;
  bool infinite = false;

  static Length inf() { return {0, true}; }
  friend bool operator==(const Length&, const Length&) = default;
  std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
};

inline Length operator+(Length a, Length b) {
  if (a.infinite || b.infinite) return Length::inf();
  return {a.value + b.value, false};
}
inline bool operator<=(Length a, Length b) {
  if (b.infinite) return true;
  if (a.infinite) return false;
  return a.value <= b.value;
}

/// Thread-safe memo of N2 enumerations. References handed out stay valid for
/// the lifetime of the cache.
template <Category C>
class N2Cache {
 public:
  explicit N2Cache(const C& c) : c_(&c) {}

  const Decomps<C>& operator()(const MorOf<C>& f) const {
    {
      std::shared_lock lock(mu_);
      auto it = memo_.find(f);
      if (it != memo_.end()) return it->second;
    }
    Decomps<C> d = c_->n2(f);
    std::unique_lock lock(mu_);
    return memo_.try_emplace(f, std::move(d)).first->second;
  }

  const C& instance() const { return *c_; }

 private:
  const C* c_;
  mutable std::shared_mutex mu_;
  mutable std::map<MorOf<C>, Decomps<C>> memo_;
};

/// All n-tuples of non-identity morphisms composing to f.
template <Category C>
std::vector<std::vector<MorOf<C>>> nhat(const C& c, const MorOf<C>& f, std::size_t n) {
  std::vector<std::vector<MorOf<C>>> out;
  if (n == 0) return out;
  if (n == 1) {
    if (!c.is_identity(f)) out.push_back({f});
    return out;
  }
  for (const auto& [a, b] : c.n2(f)) {
    if (c.is_identity(a)) continue;
    for (auto& tail : nhat(c, b, n - 1)) {
      tail.insert(tail.begin(), a);
      out.push_back(std::move(tail));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Memoized length computation. A morphism revisited along a chain of
/// non-identity left factors admits arbitrarily long decompositions.
template <Category C>
class LengthOracle {
 public:
  explicit LengthOracle(const N2Cache<C>& n2, std::size_t depth_cap = 4096) : n2_(&n2), cap_(depth_cap) {}

  Length operator()(const MorOf<C>& f) const {
    {
      std::lock_guard lock(mu_);
      auto it = memo_.find(f);
      if (it != memo_.end()) return to_length(it->second);
    }
    std::map<MorOf<C>, Value> local;
    std::set<MorOf<C>> stack;
    Value v = visit(f, local, stack, 0);
    std::lock_guard lock(mu_);
    memo_.insert(local.begin(), local.end());
    return to_length(v);
  }

 private:
  // -1 encodes "no non-degenerate decomposition", -2 encodes infinity.
  using Value = long long;
  static constexpr Value kNone = -1;
  static constexpr Value kInf = -2;

  static Length to_length(Value v) {
    if (v == kInf) return Length::inf();
    return {static_cast<std::size_t>(std::max<Value>(v, 0)), false};
  }

  Value visit(const MorOf<C>& f, std::map<MorOf<C>, Value>& local, std::set<MorOf<C>>& stack,
              std::size_t depth) const {
    if (stack.count(f)) return kInf;
    if (auto it = local.find(f); it != local.end()) return it->second;
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    }
    if (depth > cap_) throw Divergence("length recursion exceeded depth " + std::to_string(cap_));
    const auto& c = n2_->instance();
    Value best = c.is_identity(f) ? kNone : 1;
    stack.insert(f);
    for (const auto& [a, b] : (*n2_)(f)) {
      if (c.is_identity(a)) continue;
      Value vb = visit(b, local, stack, depth + 1);
      if (vb == kInf) {
        best = kInf;
        break;
      }
      if (vb >= 1) best = std::max(best, vb + 1);
    }
    stack.erase(f);
    local[f] = best;
    return best;
  }

  const N2Cache<C>* n2_;
  std::size_t cap_;
  mutable std::mutex mu_;
  mutable std::map<MorOf<C>, Value> memo_;
};

template <Category C>
Length length(const C& c, const MorOf<C>& f) {
  N2Cache<C> cache(c);
  return LengthOracle<C>(cache)(f);
}

/// Brute-force decompositions of f drawn from a finite pool of candidates.
template <Category C>
class PairOracle {
 public:
  PairOracle(const C& c, std::vector<MorOf<C>> pool) : c_(&c), pool_(std::move(pool)) {
    std::sort(pool_.begin(), pool_.end());
    pool_.erase(std::unique(pool_.begin(), pool_.end()), pool_.end());
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      by_target_[c.target(pool_[i])].push_back(i);
      by_source_[c.source(pool_[i])].push_back(i);
    }
  }

  std::size_t pool_size() const { return pool_.size(); }

  Decomps<C> operator()(const MorOf<C>& f) const {
    Decomps<C> out;
    auto lefts = by_target_.find(c_->target(f));
    auto rights = by_source_.find(c_->source(f));
    if (lefts == by_target_.end() || rights == by_source_.end()) return out;
    for (std::size_t i : lefts->second) {
      const auto& a = pool_[i];
      for (std::size_t j : rights->second) {
        const auto& b = pool_[j];
        if (!(c_->source(a) == c_->target(b))) continue;
        if (c_->compose(a, b) == f) out.emplace_back(a, b);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const C* c_;
  std::vector<MorOf<C>> pool_;
  std::map<ObjOf<C>, std::vector<std::size_t>> by_target_;
  std::map<ObjOf<C>, std::vector<std::size_t>> by_source_;
};

namespace detail {

template <class C>
std::string render_pair(const C& c, const MorOf<C>& a, const MorOf<C>& b) {
  return "(" + c.render(a) + ", " + c.render(b) + ")";
}

template <class C, class F>
void collect(Report& report, std::size_t n, F&& per_item, Exec exec) {
  auto parts = index_map(n, per_item, exec);
  for (auto& part : parts)
    for (auto& finding : part) report.add(std::move(finding));
}

}  // namespace detail

/// Compares the instance enumerator with a brute-force oracle on each sample morphism.
template <Category C, class Filter>
Report check_oracle(const C& c, const std::vector<MorOf<C>>& sample, const PairOracle<C>& oracle, Filter&& keep,
                    Exec exec = Exec::Parallel) {
  Report report(c.name() + ": n2 vs brute-force oracle");
  report.note("oracle pool size " + std::to_string(oracle.pool_size()));
  detail::collect<C>(report, sample.size(), [&](std::size_t i) {
    const auto& f = sample[i];
    std::vector<Finding> out;
    Decomps<C> fast = c.n2(f);
    std::sort(fast.begin(), fast.end());
    bool duplicate_free = std::adjacent_find(fast.begin(), fast.end()) == fast.end();
    Decomps<C> slow;
    for (auto& p : oracle(f))
      if (keep(f, p.first, p.second)) slow.push_back(std::move(p));
    bool same = fast == slow;
    std::string detail = "enumerator " + std::to_string(fast.size()) + ", oracle " + std::to_string(slow.size());
    if (!same) {
      for (const auto& p : fast)
        if (!std::binary_search(slow.begin(), slow.end(), p)) {
          detail += "; extra " + detail::render_pair(c, p.first, p.second);
          break;
        }
      for (const auto& p : slow)
        if (!std::binary_search(fast.begin(), fast.end(), p)) {
          detail += "; missing " + detail::render_pair(c, p.first, p.second);
          break;
        }
    }
    out.push_back({"n2 matches oracle", c.render(f), same && duplicate_free, detail});
    return out;
  }, exec);
  return report;
}

template <Category C>
Report check_oracle(const C& c, const std::vector<MorOf<C>>& sample, const PairOracle<C>& oracle,
                    Exec exec = Exec::Parallel) {
  return check_oracle(c, sample, oracle, [](const auto&, const auto&, const auto&) { return true; }, exec);
}

/// Soundness of the enumerator: every pair composes to f and both degenerate pairs occur.
template <Category C>
Report check_decompositions(const C& c, const std::vector<MorOf<C>>& sample, Exec exec = Exec::Parallel) {
  Report report(c.name() + ": decomposition soundness");
  detail::collect<C>(report, sample.size(), [&](std::size_t i) {
    const auto& f = sample[i];
    std::vector<Finding> out;
    auto d = c.n2(f);
    std::string bad;
    for (const auto& [a, b] : d) {
      if (!(c.source(a) == c.target(b)) || !(c.compose(a, b) == f)) {
        bad = detail::render_pair(c, a, b);
        break;
      }
    }
    out.push_back({"pairs compose to f", c.render(f), bad.empty(), bad});
    auto left = std::make_pair(c.identity(c.target(f)), f);
    auto right = std::make_pair(f, c.identity(c.source(f)));
    bool has = std::find(d.begin(), d.end(), left) != d.end() && std::find(d.begin(), d.end(), right) != d.end();
    out.push_back({"degenerate pairs present", c.render(f), has, {}});
    return out;
  }, exec);
  return report;
}

template <Category C>
Report check_locally_finite(const C& c, const std::vector<MorOf<C>>& sample, Exec exec = Exec::Parallel) {
  Report report(c.name() + ": local finiteness");
  detail::collect<C>(report, sample.size(), [&](std::size_t i) {
    std::vector<Finding> out;
    try {
      auto d = c.n2(sample[i]);
      out.push_back({"locally finite", c.render(sample[i]), true, "|N2| = " + std::to_string(d.size())});
    } catch (const EnumerationBound& e) {
      out.push_back({"locally finite", c.render(sample[i]), false, e.what()});
    }
    return out;
  }, exec);
  return report;
}

/// Isomorphism test through the decompositions of the target identity.
template <Category C>
std::optional<MorOf<C>> find_inverse(const C& c, const N2Cache<C>& n2, const MorOf<C>& f) {
  for (const auto& [a, b] : n2(c.identity(c.target(f))))
    if (a == f && c.is_identity(c.compose(b, a))) return b;
  return std::nullopt;
}

template <Category C>
Report check_mobius(const C& c, const std::vector<MorOf<C>>& sample, Exec exec = Exec::Parallel) {
  Report report(c.name() + ": Moebius property");
  N2Cache<C> n2(c);
  LengthOracle<C> len(n2);
  for (const auto& f : sample) len(f);  // serial warm-up fixes memo order
  detail::collect<C>(report, sample.size(), [&](std::size_t i) {
    const auto& f = sample[i];
    std::vector<Finding> out;
    std::string name = c.render(f);
    try {
      std::size_t k = n2(f).size();
      out.push_back({"locally finite", name, true, "|N2| = " + std::to_string(k)});
      Length l = len(f);
      out.push_back({"finite length", name, !l.infinite, "length " + l.to_string()});
    } catch (const Error& e) {
      out.push_back({"locally finite", name, false, e.what()});
      return out;
    }
    if (!c.is_identity(f)) {
      auto inv = find_inverse(c, n2, f);
      out.push_back({"no nontrivial isomorphism", name, !inv,
                     inv ? "inverse " + c.render(*inv) : std::string{}});
      bool idem = c.source(f) == c.target(f) && c.compose(f, f) == f;
      out.push_back({"no nontrivial idempotent", name, !idem, {}});
    }
    return out;
  }, exec);
  return report;
}

}  // namespace incat
