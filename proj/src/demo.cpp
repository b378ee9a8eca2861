#include "incat/demo.hpp"

#include <algorithm>
#include <sstream>

#include "incat/bigraph.hpp"
#include "incat/error.hpp"
#include "incat/forest.hpp"
#include "incat/incidence.hpp"
#include "incat/quiver.hpp"
#include "incat/relmonoid.hpp"
#include "incat/skew.hpp"
#include "incat/twogroup.hpp"

namespace incat {

namespace {

std::string monex() {
  std::ostringstream out;
  FreeMonoidCategory c("xy");
  Incidence<FreeMonoidCategory> inc(c, Rational(1));
  out << "instance: words over {x,y}, a morphism (u,v) for each pair of equal length\n";
  out << "anchor: Δ(α) = α⊗α + β⊗γ, Δ(β) = α⊗β + β⊗δ, Δ(γ) = γ⊗α + δ⊗γ, Δ(δ) = γ⊗β + δ⊗δ\n";
  const std::vector<std::pair<std::string, std::string>> named{
      {"α", "(x,x)"}, {"β", "(x,y)"}, {"γ", "(y,x)"}, {"δ", "(y,y)"}};
  for (const auto& [greek, lit] : named) out << greek << " = " << lit << "\n";
  for (const auto& [greek, lit] : named) {
    auto f = c.parse(lit);
    out << "Δ(" << greek << ") = " << inc.render(inc.coproduct(f)) << "\n";
  }
  for (const auto& [greek, lit] : named) out << "ε(" << greek << ") = " << inc.counit(c.parse(lit)).to_string() << "\n";
  out << "ε((x,x)·(y,y)) = " << inc.counit(c.product(c.parse("(x,x)"), c.parse("(y,y)"))).to_string() << "\n";
  return out.str();
}

std::string skew() {
  std::ostringstream out;
  SkewCategory sk;
  const std::string r = "00101", q = "01010", p = "10100";
  auto rq = sk.make(r, q), qp = sk.make(q, p), rp = sk.make(r, p);
  out << "instance: skew shapes between lattice paths; r=" << r << " q=" << q << " p=" << p << "\n";
  out << "anchor: (q,p)∘(r,q) = (r,p); (q,p)·(r,q) = (qr,pq); components 1, 3, 3, 6\n";
  auto comp = sk.compose(qp, rq);
  auto prod = sk.product(qp, rq);
  out << "(q,p)∘(r,q) = " << sk.render(comp) << (comp == rp ? "  [= (r,p)]" : "  [differs from (r,p)]") << "\n";
  out << "(q,p)·(r,q) = " << sk.render(prod) << "\n";
  for (const auto& [label, f] : std::vector<std::pair<std::string, SkewCategory::Mor>>{
           {"(r,p)", rp}, {"(r,q)", rq}, {"(q,p)", qp}, {"(qr,pq)", prod}})
    out << "components of " << label << ": " << sk.connected_factorization(f).size() << "\n";
  Incidence<SkewCategory> inc(sk, Rational(1));
  out << "Δ(r,p) = " << inc.render(inc.coproduct(rp)) << "\n";
  return out.str();
}

std::string forest_ck() {
  std::ostringstream out;
  out << "instance: core forests of planar rooted trees (Connes-Kreimer quotient)\n";
  out << "anchor: the trunk of each admissible cut sits on the left tensor leg\n";
  for (const char* s : {"•", "•(•)", "•(•,•)", "•(•(•))", "•·•"}) {
    auto t = parse_core(s);
    out << "Δ(" << s << ") = " << render(ck_coproduct(t)) << "\n";
    out << "S(" << s << ") = " << render(ck_antipode(t)) << "\n";
  }
  ForestCategory fc;
  auto f = parse_forest("[B(B(W))]");
  out << "operadic forest " << fc.render(f) << " has core " << core(f).code << " and " << fc.n2(f).size()
      << " factorizations\n";
  return out.str();
}

std::string bigraph_react() {
  std::ostringstream out;
  BigraphCategory c;
  ReactionRule rule;
  out << "instance: bigraphs with reaction rule: sibling " << rule.first << "," << rule.second << " under one root -> "
      << rule.merged << "\n";
  out << "anchor: r does not act on g itself but acts on M∘b for terms a⊗b of Δ(g)\n";
  auto g = c.parse("bigraph{roots=1;sites=0;inner=0;outer=0;vertices=3;prnt=[v0:r0,v1:v0,v2:v0];ports=[];classes=[];labels=[v0:C,v1:A,v2:B]}");
  out << "g = " << c.render(g) << "\n";
  out << "r(g) = g: " << (apply_rule(rule, g) == g ? "yes" : "no") << "\n";
  auto terms = blocked_reaction_terms(rule, g, 2);
  out << "blocked reaction terms (merge contexts up to 2 places): " << terms.size() << "\n";
  for (const auto& t : terms)
    out << "  M" << t.context_places << ": " << c.render(t.upper) << " ⊗ r(M∘" << c.render(t.lower)
        << ") = " << c.render(t.reacted) << "\n";
  auto s = c.parse("bigraph{roots=1;sites=0;inner=0;outer=0;vertices=2;prnt=[v0:r0,v1:r0];ports=[];classes=[];labels=[v0:A,v1:B]}");
  out << "sibling pair " << c.render(s) << " reacts to " << c.render(apply_rule(rule, s)) << "\n";
  return out.str();
}

std::string quiver_fail() {
  std::ostringstream out;
  QuiverCategory q(FiniteGroup::cyclic_group(2), 1);
  out << "instance: path category of the quiver on Z/2 with arrows a -> a+1\n";
  out << "anchor: a monoidal quiver with an arrow is not ULF\n";
  out << quiver_ulf_failure(q).to_text() << "\n";
  QuiverCategory none(FiniteGroup::cyclic_group(2), std::nullopt);
  out << "without arrows: " << none.paths_up_to(3).size() << " morphisms, all identities\n";
  return out.str();
}

std::string xmod_s3() {
  std::ostringstream out;
  auto S3 = FiniteGroup::symmetric(3);
  std::vector<FiniteGroup::Elem> A3;
  const auto alt = FiniteGroup::alternating(3);
  for (const auto& n : alt.names()) A3.push_back(*S3.find(n));
  std::sort(A3.begin(), A3.end());
  TwoGroupCategory c(normal_subgroup_xmod(S3, A3, "xmod(S3,A3)"));
  auto wh = weak_hopf_structure(c);
  Incidence<TwoGroupCategory> inc(c, wh.scale);
  out << "instance: 2-group of the crossed module (S3, A3, inclusion, conjugation)\n";
  out << "anchor: weak Hopf structure with scale |S| and antipode f ↦ f̄⁻¹\n";
  auto mors = c.morphisms();
  out << "morphisms: " << mors.size() << ", |S| = " << source_subgroup(c).size() << ", scale = " << wh.scale.to_string()
      << "\n";
  std::size_t n2_three = 0, agree = 0;
  for (const auto& f : mors) {
    n2_three += c.n2(f).size() == 3;
    agree += theorem_antipode(c, f) == corollary_antipode(c, f);
  }
  out << "|N2(f)| = 3 for " << n2_three << " of " << mors.size() << " morphisms\n";
  auto one = c.identity(c.unit());
  out << "Δ(" << c.render(one) << ") = " << inc.render(inc.coproduct(one)) << "\n";
  auto rep = check_weak_hopf<TwoGroupCategory>(inc, wh.antipode, mors, Exec::Serial);
  out << rep.to_text(false);
  out << "closed formula (α(g⁻¹,h⁻¹)⁻¹, g⁻¹) agrees with f̄⁻¹ on " << agree << " of " << mors.size() << " morphisms\n";
  return out.str();
}

}  // namespace

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names{"monex", "skew", "forest-ck", "bigraph-react", "quiver-fail", "xmod-s3"};
  return names;
}

std::string run_demo(const std::string& name) {
  if (name == "monex") return monex();
  if (name == "skew") return skew();
  if (name == "forest-ck") return forest_ck();
  if (name == "bigraph-react") return bigraph_react();
  if (name == "quiver-fail") return quiver_fail();
  if (name == "xmod-s3") return xmod_s3();
  throw PreconditionViolation("unknown demo '" + name + "'");
}

}  // namespace incat
