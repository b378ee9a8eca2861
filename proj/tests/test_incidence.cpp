#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "incat/incidence.hpp"
#include "incat/quiver.hpp"
#include "incat/relmonoid.hpp"
#include "incat/skew.hpp"

using namespace incat;

TEST_CASE("golden coproducts on the equal-length word category") {
  FreeMonoidCategory c("xy");
  Incidence<FreeMonoidCategory> inc(c, Rational(1));
  auto D = [&](const char* s) { return inc.render(inc.coproduct(c.parse(s))); };
  CHECK(D("(x,x)") == "1*(x,x)⊗(x,x) + 1*(x,y)⊗(y,x)");
  CHECK(D("(x,y)") == "1*(x,x)⊗(x,y) + 1*(x,y)⊗(y,y)");
  CHECK(D("(y,x)") == "1*(y,x)⊗(x,x) + 1*(y,y)⊗(y,x)");
  CHECK(D("(y,y)") == "1*(y,x)⊗(x,y) + 1*(y,y)⊗(y,y)");
  CHECK(D("(,)") == "1*(1,1)⊗(1,1)");
  CHECK(inc.coproduct(c.parse("(xy,yx)")).size() == 4);
  CHECK(inc.counit(c.parse("(x,y)")).is_zero());
  CHECK(inc.counit(c.parse("(xy,xy)")).is_one());
}

TEST_CASE("scaled coproduct divides by the scale and the counit returns it") {
  FreeMonoidCategory c("xy");
  Incidence<FreeMonoidCategory> inc(c, Rational(2));
  auto d = inc.coproduct(c.parse("(x,x)"));
  for (const auto& [k, v] : d) CHECK(v == Rational(1, 2));
  CHECK(inc.counit(c.parse("(y,y)")) == Rational(2));
  auto words = c.morphisms_up_to(2);
  CHECK(check_coalgebra(inc, words).passed());
  auto bi = check_bialgebra(inc, words, PairScope::AllPairs);
  CHECK_FALSE(bi.passed("counit multiplicative"));
  CHECK_THROWS_AS(Incidence<FreeMonoidCategory>(c, Rational(0)), PreconditionViolation);
}

TEST_CASE("discrete group instance is the group algebra") {
  RelMonoidCategory c(FiniteMonoid::cyclic(3), Relation::equality(3), "Z/3");
  Incidence<RelMonoidCategory> inc(c, Rational(1));
  for (int g = 0; g < 3; ++g) {
    auto i = c.identity(g);
    CHECK(inc.coproduct(i) == FreeVec2<RelMonoidCategory::Mor>::basis({i, i}));
  }
  CombinatorialAntipode<RelMonoidCategory> S(inc);
  CHECK(S(c.identity(1)) == FreeVec<RelMonoidCategory::Mor>::basis(c.identity(2)));
  CHECK(check_antipode(inc, S, c.morphisms()).passed());
  CHECK(check_bialgebra(inc, c.morphisms()).passed());
}

TEST_CASE("antipode needs scale one and invertible objects") {
  RelMonoidCategory c(FiniteMonoid::cyclic(3), Relation::equality(3));
  Incidence<RelMonoidCategory> scaled(c, Rational(3));
  CHECK_THROWS_AS(CombinatorialAntipode<RelMonoidCategory>{scaled}, PreconditionViolation);
  FreeMonoidCategory w("xy");
  Incidence<FreeMonoidCategory> inc(w, Rational(1));
  CombinatorialAntipode<FreeMonoidCategory> S(inc);
  CHECK_THROWS_AS(S(w.parse("(x,x)")), PreconditionViolation);
  CHECK(S(w.parse("(,)")) == inc.one());
}

TEST_CASE("antipode on the arrow-free quiver is group inversion") {
  QuiverCategory q(FiniteGroup::cyclic_group(5), std::nullopt);
  Incidence<QuiverCategory> inc(q, Rational(1));
  CombinatorialAntipode<QuiverCategory> S(inc);
  for (int a = 0; a < 5; ++a) CHECK(S(q.identity(a)) == FreeVec<QuiverCategory::Mor>::basis(q.identity((5 - a) % 5)));
}

TEST_CASE("convolution identities") {
  SkewCategory sk;
  Incidence<SkewCategory> inc(sk, Rational(1));
  auto f = sk.make("0011", "1100");
  auto ue = inc.unit_counit();
  auto id = inc.identity_map();
  auto left = inc.convolve(ue, id);
  auto right = inc.convolve(id, ue);
  CHECK(left(f) == inc.basis(f));
  CHECK(right(f) == inc.basis(f));
  auto sq = inc.convolve(id, id)(f);
  Rational total(0);
  for (const auto& [k, v] : sq) total += v;
  CHECK(total == Rational(static_cast<long>(sk.n2(f).size())));
}

TEST_CASE("coproduct agrees with the brute-force oracle and bialgebra laws hold on shapes") {
  SkewCategory sk;
  auto shapes = sk.shapes_up_to(4);
  PairOracle<SkewCategory> oracle(sk, shapes);
  CHECK(check_oracle(sk, shapes, oracle).passed());
  Incidence<SkewCategory> inc(sk, Rational(1));
  auto serial = check_bialgebra(inc, shapes, PairScope::ProductInSample, Exec::Serial);
  auto parallel = check_bialgebra(inc, shapes, PairScope::ProductInSample, Exec::Parallel);
  CHECK(serial.passed());
  CHECK(serial.to_text(true) == parallel.to_text(true));
  CHECK(serial.passed("unit is grouplike"));
  CHECK(serial.passed("length filtration"));
}

TEST_CASE("collapsing identities") {
  QuiverCategory q(FiniteGroup::cyclic_group(2), std::nullopt);
  Incidence<QuiverCategory> inc(q, Rational(1));
  auto v = inc.basis(q.identity(1)) + inc.basis(q.identity(0));
  CHECK(inc.collapse_identities(v) == Rational(2) * inc.one());
}

TEST_CASE("three-fold coproducts are coassociative on words") {
  FreeMonoidCategory c("xyz");
  Incidence<FreeMonoidCategory> inc(c, Rational(1));
  auto f = c.parse("(xy,zx)");
  auto d = inc.coproduct(f);
  CHECK(inc.coproduct_left(d) == inc.coproduct_right(d));
  CHECK(inc.counit_left(d) == inc.basis(f));
  CHECK(inc.counit_right(d) == inc.basis(f));
  CHECK(inc.coproduct_left(d).size() == 81);
}
