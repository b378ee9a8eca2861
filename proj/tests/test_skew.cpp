#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "incat/incidence.hpp"
#include "incat/skew.hpp"

using namespace incat;

namespace {

std::vector<int> prefix_ones(const LatticePath& p) {
  std::vector<int> out{0};
  for (char ch : p) out.push_back(out.back() + (ch == '1'));
  return out;
}

// Independent dominance: q <= p when every prefix of p has at least as many ones.
bool leq(const LatticePath& q, const LatticePath& p) {
  if (q.size() != p.size() || path_stats(q) != path_stats(p)) return false;
  auto a = prefix_ones(q), b = prefix_ones(p);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

const LatticePath r = "00101", q = "01010", p = "10100";

TEST_CASE("path statistics and dominance") {
  CHECK(path_stats("10100") == PathStats{2, 3});
  CHECK(path_stats("") == PathStats{0, 0});
  CHECK(path_stats("111") == PathStats{3, 0});
  CHECK(dominates(q, p) == Dominance::Leq);
  CHECK(dominates(r, p) == Dominance::Lt);
  CHECK(dominates(p, p) == Dominance::Leq);
  CHECK(dominates(r, p) != Dominance::NotComparable);
  CHECK(dominates(p, r) == Dominance::NotComparable);
  CHECK_FALSE(is_path("012"));
  for (const auto& a : paths_with(2, 3))
    for (const auto& b : paths_with(2, 3)) CHECK((dominates(a, b) != Dominance::NotComparable) == leq(a, b));
}

TEST_CASE("golden composition, product and components") {
  SkewCategory sk;
  auto rq = sk.make(r, q), qp = sk.make(q, p), rp = sk.make(r, p);
  CHECK(sk.compose(qp, rq) == rp);
  CHECK(sk.compose(sk.identity(p), rp) == rp);
  auto prod = sk.product(qp, rq);
  CHECK(prod == sk.make(q + r, p + q));
  CHECK(sk.connected_factorization(rp).size() == 1);
  CHECK(sk.connected_factorization(rq).size() == 3);
  CHECK(sk.connected_factorization(qp).size() == 3);
  CHECK(sk.connected_factorization(prod).size() == 6);
  CHECK(sk.is_connected(rp));
  CHECK_THROWS_AS(sk.make(p, r), PreconditionViolation);
  CHECK_THROWS_AS(sk.compose(rq, rq), NotComposable);
}

TEST_CASE("factorization reassembles and its factors admit no cut") {
  SkewCategory sk;
  for (const auto& f : sk.shapes_up_to(5)) {
    auto parts = sk.connected_factorization(f);
    auto acc = sk.identity("");
    for (const auto& g : parts) {
      acc = sk.product(acc, g);
      CHECK(sk.connected_factorization(g).size() == 1);
    }
    CHECK(acc == f);
  }
}

TEST_CASE("middle-path oracle for the coproduct") {
  SkewCategory sk;
  auto f = sk.make(r, p);
  std::size_t middles = 0;
  for (const auto& m : paths_with(2, 3)) middles += leq(r, m) && leq(m, p);
  CHECK(sk.n2(f).size() == middles);
  CHECK(middles == 8);
  auto shapes = sk.shapes_up_to(5);
  CHECK(shapes.size() == 196);
  for (const auto& g : shapes) {
    std::size_t count = 0;
    auto st = path_stats(g.lower);
    for (const auto& m : paths_with(st.height, st.width)) count += leq(g.lower, m) && leq(m, g.upper);
    CHECK(sk.n2(g).size() == count);
  }
}

TEST_CASE("dominance preserved by concatenation") {
  SkewCategory sk;
  auto shapes = sk.shapes_up_to(4);
  for (const auto& a : shapes)
    for (const auto& b : shapes) CHECK(leq(a.lower + b.lower, a.upper + b.upper));
}

TEST_CASE("parse and render") {
  SkewCategory sk;
  auto f = sk.parse("skew(00101,10100)");
  CHECK(sk.render(f) == "skew(00101,10100)");
  CHECK_THROWS_AS(sk.parse("skew(0010,10100)"), Error);
  CHECK_THROWS_AS(sk.parse("skw(0,0)"), ParseError);
}

TEST_CASE("laws on the length 4 fragment") {
  SkewCategory sk;
  auto shapes = sk.shapes_up_to(4);
  CHECK(check_interchange_all(sk, sk.shapes_up_to(3)).passed());
  CHECK(check_combinatorial(sk, shapes).passed());
  Incidence<SkewCategory> inc(sk, Rational(1));
  CHECK(check_bialgebra(inc, shapes, PairScope::ProductInSample).passed());
}
