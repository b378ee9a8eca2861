#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "incat/category.hpp"

using namespace incat;

namespace {

// Divisibility order on 1..n viewed as a thin category: one arrow d -> m when d | m.
struct Divisibility {
  using Obj = int;
  struct Mor {
    int lo = 1, hi = 1;
    friend auto operator<=>(const Mor&, const Mor&) = default;
  };
  int n = 36;
  bool drop_one = false;  // deliberately broken enumerator

  std::string name() const { return "divisibility"; }
  Obj source(const Mor& f) const { return f.lo; }
  Obj target(const Mor& f) const { return f.hi; }
  Mor compose(const Mor& a, const Mor& b) const {
    if (a.lo != b.hi) throw NotComposable(render(a), render(b));
    return {b.lo, a.hi};
  }
  Mor identity(Obj x) const { return {x, x}; }
  bool is_identity(const Mor& f) const { return f.lo == f.hi; }
  std::vector<std::pair<Mor, Mor>> n2(const Mor& f) const {
    std::vector<std::pair<Mor, Mor>> out;
    for (int e = f.lo; e <= f.hi; e += f.lo)
      if (f.hi % e == 0) out.push_back({{e, f.hi}, {f.lo, e}});
    if (drop_one && out.size() > 2) out.erase(out.begin() + 1);
    return out;
  }
  std::string render(const Mor& f) const { return std::to_string(f.lo) + "|" + std::to_string(f.hi); }
  std::vector<Mor> morphisms() const {
    std::vector<Mor> out;
    for (int d = 1; d <= n; ++d)
      for (int m = d; m <= n; m += d) out.push_back({d, m});
    return out;
  }
};

// Cyclic group Z/k as a one-object category.
struct CyclicGroupoid {
  using Obj = int;
  using Mor = int;
  int k = 3;
  std::string name() const { return "Z/" + std::to_string(k); }
  Obj source(Mor) const { return 0; }
  Obj target(Mor) const { return 0; }
  Mor compose(Mor a, Mor b) const { return (a + b) % k; }
  Mor identity(Obj) const { return 0; }
  bool is_identity(Mor f) const { return f == 0; }
  std::vector<std::pair<Mor, Mor>> n2(Mor f) const {
    std::vector<std::pair<Mor, Mor>> out;
    for (int b = 0; b < k; ++b) out.push_back({((f - b) % k + k) % k, b});
    std::sort(out.begin(), out.end());
    return out;
  }
  std::string render(Mor f) const { return "g" + std::to_string(f); }
};

// Refuses to enumerate beyond a bound.
struct Bounded : Divisibility {
  std::vector<std::pair<Mor, Mor>> n2(const Mor& f) const {
    if (f.hi / f.lo > 8) throw EnumerationBound("too many");
    return Divisibility::n2(f);
  }
};

int divisor_count(int m) {
  int c = 0;
  for (int e = 1; e <= m; ++e) c += m % e == 0;
  return c;
}

int big_omega(int m) {
  int c = 0;
  for (int p = 2; m > 1; ++p)
    while (m % p == 0) {
      m /= p;
      ++c;
    }
  return c;
}

}  // namespace

static_assert(Category<Divisibility>);
static_assert(Category<CyclicGroupoid>);

TEST_CASE("n2 sizes of the divisibility order match divisor counts") {
  Divisibility c;
  for (const auto& f : c.morphisms()) CHECK(c.n2(f).size() == static_cast<std::size_t>(divisor_count(f.hi / f.lo)));
}

TEST_CASE("lengths of the divisibility order are prime-factor counts") {
  Divisibility c;
  N2Cache<Divisibility> cache(c);
  LengthOracle<Divisibility> len(cache);
  for (const auto& f : c.morphisms()) {
    Length l = len(f);
    CHECK_FALSE(l.infinite);
    CHECK(l.value == static_cast<std::size_t>(big_omega(f.hi / f.lo)));
  }
  CHECK(length(c, Divisibility::Mor{1, 32}).value == 5);
}

TEST_CASE("length recursion past the cap diverges") {
  Divisibility c;
  c.n = 64;
  N2Cache<Divisibility> cache(c);
  LengthOracle<Divisibility> len(cache, 0);
  CHECK_THROWS_AS(len(Divisibility::Mor{1, 64}), Divergence);
}

TEST_CASE("nhat lists chains of non-identity morphisms") {
  Divisibility c;
  auto two = nhat(c, Divisibility::Mor{1, 12}, 2);
  CHECK(two.size() == 4);  // through 2, 3, 4, 6
  auto three = nhat(c, Divisibility::Mor{1, 12}, 3);
  CHECK(three.size() == 3);  // 1|2|4|12, 1|2|6|12, 1|3|6|12
  CHECK(nhat(c, Divisibility::Mor{1, 12}, 4).empty());
  CHECK(nhat(c, Divisibility::Mor{3, 3}, 1).empty());
  CHECK(nhat(c, Divisibility::Mor{1, 12}, 0).empty());
}

TEST_CASE("a poset is Moebius") {
  Divisibility c;
  auto r = check_mobius(c, c.morphisms());
  CHECK(r.passed());
  CHECK(r.count("no nontrivial isomorphism") > 0);
}

TEST_CASE("a group fails the Moebius property with witnesses") {
  CyclicGroupoid g;
  std::vector<int> all{0, 1, 2};
  auto r = check_mobius(g, all);
  CHECK_FALSE(r.passed("no nontrivial isomorphism"));
  CHECK_FALSE(r.passed("finite length"));
  auto w = r.first_failure("no nontrivial isomorphism");
  REQUIRE(w);
  CHECK(w->subject == "g1");
  CHECK(w->detail == "inverse g2");
  N2Cache<CyclicGroupoid> cache(g);
  CHECK(*find_inverse(g, cache, 1) == 2);
  CHECK(length(g, 1).infinite);
}

TEST_CASE("the pair oracle agrees with a correct enumerator and catches a broken one") {
  Divisibility c;
  auto pool = c.morphisms();
  PairOracle<Divisibility> oracle(c, pool);
  CHECK(oracle.pool_size() == pool.size());
  CHECK(check_oracle(c, pool, oracle).passed());

  Divisibility broken = c;
  broken.drop_one = true;
  PairOracle<Divisibility> oracle2(broken, pool);
  auto r = check_oracle(broken, pool, oracle2);
  CHECK_FALSE(r.passed());
  CHECK(r.first_failure()->detail.find("missing") != std::string::npos);
}

TEST_CASE("decomposition soundness") {
  Divisibility c;
  CHECK(check_decompositions(c, c.morphisms()).passed());
  CyclicGroupoid g;
  CHECK(check_decompositions(g, std::vector<int>{0, 1, 2}).passed());
}

TEST_CASE("local finiteness reports enumeration bounds") {
  Bounded b;
  auto r = check_locally_finite(b, b.morphisms());
  CHECK_FALSE(r.passed());
  CHECK(r.first_failure()->subject == "1|9");
}

TEST_CASE("serial and parallel checks produce identical reports") {
  Divisibility c;
  auto pool = c.morphisms();
  PairOracle<Divisibility> oracle(c, pool);
  CHECK(check_mobius(c, pool, Exec::Serial).to_text(true) == check_mobius(c, pool, Exec::Parallel).to_text(true));
  CHECK(check_oracle(c, pool, oracle, Exec::Serial).to_text(true) ==
        check_oracle(c, pool, oracle, Exec::Parallel).to_text(true));
  CyclicGroupoid g;
  std::vector<int> all{0, 1, 2};
  CHECK(check_mobius(g, all, Exec::Serial).to_text(true) == check_mobius(g, all, Exec::Parallel).to_text(true));
}

TEST_CASE("composition mismatches throw") {
  Divisibility c;
  CHECK_THROWS_AS(c.compose({2, 4}, {1, 3}), NotComposable);
}
