#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "incat/forest.hpp"
#include "incat/incidence.hpp"

using namespace incat;

namespace {

CKVec2 core_image(const ForestCategory& c, const OpForest& f) {
  CKVec2 out;
  for (const auto& [a, b] : c.n2(f)) out.add_term({core(a), core(b)}, 1);
  return out;
}

CKVec s_star_id(const CoreForest& t) {
  CKVec out;
  for (const auto& [ab, k] : ck_coproduct(t)) out += k * ck_product(ck_antipode(ab.first), CKVec::basis(ab.second));
  return out;
}

CKVec id_star_s(const CoreForest& t) {
  CKVec out;
  for (const auto& [ab, k] : ck_coproduct(t)) out += k * ck_product(CKVec::basis(ab.first), ck_antipode(ab.second));
  return out;
}

}  // namespace

TEST_CASE("forest literals round-trip") {
  auto f = parse_forest("[B(W,B()), W]");
  CHECK(f.code == "[B(W,B()),W]");
  CHECK(interfaces(f) == Interfaces{2, 2});
  CHECK(internal_vertices(f) == 2);
  CHECK(parse_forest("id(3)") == identity_forest(3));
  CHECK(interfaces(identity_forest(3)) == Interfaces{3, 3});
  CHECK_THROWS_AS(parse_forest("[B(]"), ParseError);
  CHECK(parse_core("•(•,•)").code == "•(•,•)");
  CHECK(core_size(parse_core("•(•)·•")) == 3);
  CHECK(parse_core("1").code == "1");
}

TEST_CASE("grafting and ordered sums") {
  auto f1 = parse_forest("[B(W,W)]");
  auto f2 = parse_forest("[B(), W]");
  auto g = graft(f1, f2);
  CHECK(internal_vertices(g) == 2);
  CHECK(interfaces(g) == Interfaces{1, 1});
  auto s = osum(f1, f2);
  CHECK(interfaces(s) == Interfaces{3, 3});
  ForestCategory c;
  CHECK(check_strictness(c, c.forests(1, 2, 2)).passed());
  CHECK(check_interchange_all(c, c.forests(1, 2, 2)).passed());
}

TEST_CASE("fragment sizes") {
  ForestCategory c;
  CHECK(c.forests(4, 2, 2).size() == 530);
  CHECK(c.forests(4, 3, 3).size() == 2600);
  for (const auto& f : c.forests(2, 2, 2)) {
    CHECK(internal_vertices(f) <= 2);
    CHECK(interfaces(f).leaves <= 2);
    CHECK(interfaces(f).roots <= 2);
  }
}

TEST_CASE("n2 agrees with the grafting oracle") {
  ForestCategory c;
  auto sample = c.forests(3, 2, 2);
  PairOracle<ForestCategory> oracle(c, c.forests(3, 5, 5));
  CHECK(check_oracle(c, sample, oracle).passed());
  CHECK(check_decompositions(c, sample).passed());
}

TEST_CASE("core of the coproduct depends only on the core") {
  ForestCategory c;
  std::map<CoreForest, CKVec2> seen;
  for (const auto& f : c.forests(3, 2, 2)) {
    auto img = core_image(c, f);
    auto [it, fresh] = seen.try_emplace(core(f), img);
    if (!fresh) CHECK(it->second == img);
    CHECK(img == ck_coproduct(core(f)));
  }
  CHECK(seen.size() == 1 + 1 + 2 + 4);
}

TEST_CASE("Connes-Kreimer coproduct and antipode") {
  auto dot = parse_core("•");
  CHECK(render(ck_antipode(dot)) == "-1*•");
  CHECK(render(ck_coproduct(parse_core("•(•)"))) == "1*1⊗•(•) + 1*•⊗• + 1*•(•)⊗1");
  CHECK(render(ck_antipode(parse_core("•(•)"))) == "-1*•(•) + 1*•·•");
  CHECK(render(ck_antipode(parse_core("•(•,•)"))) == "2*•(•)·• + -1*•(•,•) + -1*•·•·•");
  auto one = parse_core("1");
  for (const auto& t : core_forests_up_to(4)) {
    CKVec unit_counit = t == one ? CKVec::basis(one) : CKVec{};
    CHECK(s_star_id(t) == unit_counit);
    CHECK(id_star_s(t) == unit_counit);
  }
  CHECK(core_forests_up_to(3).size() > 5);
}

TEST_CASE("combinatorial and bialgebra suites on small forests") {
  ForestCategory c;
  auto small = c.forests(2, 2, 2);
  CHECK(check_combinatorial(c, small).passed());
  Incidence<ForestCategory> inc(c, Rational(1));
  CHECK(check_bialgebra(inc, small, PairScope::ProductInSample).passed());
}

TEST_CASE("canonical lift has the right core") {
  for (const auto& t : core_forests_up_to(3)) CHECK(core(canonical_lift(t)) == t);
}
