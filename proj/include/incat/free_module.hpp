#pragma once

#include <concepts>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>

#include "incat/error.hpp"
#include "incat/rational.hpp"

namespace incat {

/// Finite rational linear combination of basis keys. Zero coefficients are
/// never stored, so structural equality is equality of vectors.
template <class K>
class FreeVec {
 public:
  using key_type = K;
  using map_type = std::map<K, Rational>;

  FreeVec() = default;

  static FreeVec basis(K key, Rational coeff = Rational(1)) {
    FreeVec v;
    v.add_term(std::move(key), coeff);
    return v;
  }

  void add_term(const K& key, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const map_type& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Rational coeff(const K& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  FreeVec& operator+=(const FreeVec& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  FreeVec& operator-=(const FreeVec& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  FreeVec& operator*=(const Rational& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  friend FreeVec operator+(FreeVec a, const FreeVec& b) { return a += b; }
  friend FreeVec operator-(FreeVec a, const FreeVec& b) { return a -= b; }
  friend FreeVec operator*(const Rational& c, FreeVec a) { return a *= c; }
  FreeVec operator-() const { return Rational(-1) * *this; }
  friend bool operator==(const FreeVec&, const FreeVec&) = default;

  /// Canonical text: `c*key + c*key ...` in key order, `0` for the zero vector.
  template <class Render>
  std::string render(Render&& key_text) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.to_string();
      out += '*';
      out += key_text(k);
    }
    return out;
  }

 private:
  map_type terms_;
};

template <class K>
using FreeVec2 = FreeVec<std::pair<K, K>>;
template <class K>
using FreeVec3 = FreeVec<std::tuple<K, K, K>>;

template <class K>
FreeVec<K> fm_add(const FreeVec<K>& a, const FreeVec<K>& b) {
  return a + b;
}

template <class K>
FreeVec<K> fm_scale(const Rational& c, const FreeVec<K>& a) {
  return c * a;
}

template <class A, class B>
FreeVec<std::pair<A, B>> tensor(const FreeVec<A>& a, const FreeVec<B>& b) {
  FreeVec<std::pair<A, B>> out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out.add_term({ka, kb}, ca * cb);
  return out;
}

template <class A, class B, class C>
FreeVec<std::tuple<A, B, C>> tensor(const FreeVec<A>& a, const FreeVec<B>& b, const FreeVec<C>& c) {
  FreeVec<std::tuple<A, B, C>> out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b)
      for (const auto& [kc, cc] : c) out.add_term({ka, kb, kc}, ca * cb * cc);
  return out;
}

/// Linear extension of a key-indexed map: sum over a of a[k] * f(k).
template <class K, class F>
  requires std::invocable<F, const K&>
auto apply_linear(F&& f, const FreeVec<K>& a) {
  using Out = std::remove_cvref_t<std::invoke_result_t<F, const K&>>;
  Out out;
  for (const auto& [k, c] : a) out += c * std::invoke(f, k);
  return out;
}

namespace detail {
template <class K>
std::string describe_key(const K& k) {
  if constexpr (requires(std::ostream& os) { os << k; }) {
    std::ostringstream os;
    os << k;
    return os.str();
  } else {
    return "<key>";
  }
}
}  // namespace detail

/// Table-driven variant; a key of `a` missing from the table is an error.
template <class K, class V>
V apply_linear(const std::map<K, V>& table, const FreeVec<K>& a) {
  V out;
  for (const auto& [k, c] : a) {
    auto it = table.find(k);
    if (it == table.end()) throw UndefinedKey(detail::describe_key(k));
    out += c * it->second;
  }
  return out;
}

/// Renders pair keys as `a⊗b` and triples as `a⊗b⊗c` given a renderer for the legs.
template <class Render>
auto tensor_renderer(Render leg) {
  return [leg](const auto& key) -> std::string {
    return std::apply(
        [&](const auto&... parts) {
          std::string out;
          bool first = true;
          ((out += first ? "" : "⊗", out += leg(parts), first = false), ...);
          return out;
        },
        key);
  };
}

}  // namespace incat
