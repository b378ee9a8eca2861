#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "incat/config.hpp"
#include "incat/demo.hpp"
#include "json.hpp"

using namespace incat;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(INCAT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string cfg(const std::string& name) { return std::string(INCAT_CONFIG_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("incat_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("verify exit codes follow the suite verdict") {
  CHECK(run("verify " + cfg("monex.json") + " --suite bialgebra").code == 0);
  auto q = run("verify " + cfg("quiver_z2.json") + " --suite combinatorial");
  CHECK(q.code == 1);
  CHECK(q.out.find("domain=4 codomain=3") != std::string::npos);
  CHECK(run("verify " + cfg("xmod_s3_a3.json") + " --suite weakhopf").code == 0);
  CHECK(run("verify " + cfg("skew.json") + " --suite all").code == 0);
}

TEST_CASE("usage and configuration errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("verify " + cfg("monex.json") + " --suite nope").code == 2);
  CHECK(run("verify /nonexistent/config.json").code == 2);
  CHECK(run("verify " + temp_file("bad.json", "{\"kind\": \"monex\",")).code == 2);
  CHECK(run("verify " + temp_file("kind.json", "{\"kind\": \"poset\"}")).code == 2);
  CHECK(run("verify " + cfg("xmod_s3_a3.json") + " --suite bialgebra").code == 2);
  CHECK(run("demo nope").code == 2);
  CHECK(run("coproduct " + cfg("monex.json") + " --morphism '(x,xy'").code == 2);
}

TEST_CASE("coproduct queries") {
  auto m = run("coproduct " + cfg("monex.json") + " --morphism '(x,x)'");
  CHECK(m.code == 0);
  CHECK(m.out == "1*(x,x)⊗(x,x) + 1*(x,y)⊗(y,x)\n");
  auto x = run("coproduct " + cfg("xmod_s3_a3.json") + " --morphism '(e,e)'");
  CHECK(x.out == "1/3*(e,e)⊗(e,e) + 1/3*((0 1 2),(0 2 1))⊗((0 2 1),e) + 1/3*((0 2 1),(0 1 2))⊗((0 1 2),e)\n");
  auto s = run("coproduct " + cfg("skew.json") + " --morphism 'skew(00101,10100)'");
  CHECK(s.code == 0);
  CHECK(std::count(s.out.begin(), s.out.end(), '+') == 7);
}

TEST_CASE("antipode queries") {
  auto f = run("antipode " + cfg("forest.json") + " --morphism '•'");
  CHECK(f.out == "-1*•\n");
  CHECK(run("antipode " + cfg("monex.json") + " --morphism '(x,x)'").code == 2);
  auto t = run("antipode " + cfg("xmod_s3_a3.json") + " --morphism '((0 1 2),(0 1))'");
  auto k = run("antipode " + cfg("xmod_s3_a3.json") + " --morphism '((0 1 2),(0 1))' --formula corollary");
  CHECK(t.code == 0);
  CHECK(k.code == 0);
  CHECK(t.out == "1*((0 2 1),(0 2))\n");
  CHECK(k.out == "1*((0 2 1),(0 1))\n");
}

TEST_CASE("output is byte-identical across runs and the JSON report parses") {
  auto out = std::filesystem::temp_directory_path() / "incat_test_report.json";
  auto a = run("verify " + cfg("forest.json") + " --sample 25 --seed 5 --out " + out.string());
  auto b = run("verify " + cfg("forest.json") + " --sample 25 --seed 5");
  CHECK(a.out == b.out);
  CHECK(a.out.find("seed 5") != std::string::npos);
  auto c = run("verify " + cfg("forest.json") + " --sample 25 --seed 6");
  CHECK(c.out.find("seed 6") != std::string::npos);
  std::ifstream in(out);
  auto j = nlohmann::json::parse(in);
  CHECK(j["suite"] == "all");
  CHECK(j["seed"] == 5);
  CHECK(j["pass"] == true);
  CHECK(run("verify " + cfg("forest.json") + " --serial").out == run("verify " + cfg("forest.json")).out);
}

TEST_CASE("demos") {
  auto m = run("demo monex");
  CHECK(m.code == 0);
  CHECK(m.out.find("Δ(β) = 1*(x,x)⊗(x,y) + 1*(x,y)⊗(y,y)") != std::string::npos);
  auto s = run("demo skew");
  CHECK(s.out.find("components of (qr,pq): 6") != std::string::npos);
  auto q = run("demo quiver-fail");
  CHECK(q.out.find("domain=4 codomain=3") != std::string::npos);
  for (const auto& name : demo_names()) CHECK(run("demo " + name).code == 0);
  CHECK_THROWS_AS(run_demo("unknown"), PreconditionViolation);
}

TEST_CASE("config parsing") {
  auto c = parse_config(R"j({"kind": "quiver", "group": {"cyclic": 3}, "z": "1", "max_size": 2, "scale": "1/2"})j");
  CHECK(c.kind == "quiver");
  CHECK(c.max_size == 2);
  CHECK(c.scale == Rational(1, 2));
  CHECK_THROWS_AS(parse_config("[1,2]"), InvariantViolation);
  CHECK_THROWS_AS(parse_config("{\"kind\": \"quiver\", \"max_size\": 0}"), InvariantViolation);
  CHECK_THROWS_AS(parse_config("{\"kind\": \"quiver\", \"scale\": \"0\"}"), InvariantViolation);
  CHECK_THROWS_AS(parse_config("{oops"), ParseError);
  CHECK_THROWS_AS(make_instance(parse_config(R"j({"kind": "quiver"})j")), InvariantViolation);
  CHECK_THROWS_AS(make_instance(parse_config(R"j({"kind": "quiver", "group": {"symmetric": 3}, "z": "(0 1)"})j")),
                  InvariantViolation);
  CHECK_THROWS_AS(make_instance(parse_config(R"j({"kind": "normal", "group": {"symmetric": 3}, "subgroup": ["e", "(0 1)"]})j")),
                  InvariantViolation);
  CHECK(instance_kinds().size() == 9);
}

TEST_CASE("instances built from every kind") {
  const char* docs[] = {
      R"j({"kind": "relmonoid", "monoid": {"cyclic": 2}, "relation": "equality"})j",
      R"j({"kind": "relmonoid", "monoid": {"elements": ["e", "a"], "table": [["e", "a"], ["a", "a"]]}, "relation": {"pairs": [["e", "a"]]}})j",
      R"j({"kind": "monex", "max_size": 2})j",
      R"j({"kind": "skew", "max_size": 3})j",
      R"j({"kind": "forest", "max_size": 2})j",
      R"j({"kind": "bigraph", "max_size": 1, "max_names": 0})j",
      R"j({"kind": "quiver", "group": {"permutations": [[1, 0, 2]]}})j",
      R"j({"kind": "xmod", "G": {"cyclic": 1}, "H": {"cyclic": 2}, "tau": {"0": "0", "1": "0"}, "alpha": {"0": {"0": "0", "1": "1"}}})j",
      R"j({"kind": "normal", "group": {"alternating": 4}, "subgroup": ["e", "(0 1)(2 3)", "(0 2)(1 3)", "(0 3)(1 2)"]})j",
      R"j({"kind": "aut", "group": {"cyclic": 4}})j"};
  for (const char* d : docs) {
    auto inst = make_instance(parse_config(d));
    REQUIRE(inst);
    VerifyOptions o;
    auto r = inst->verify(Suite::Coalgebra, o);
    CHECK_MESSAGE(r.passed(), d);
  }
  auto z2 = make_instance(parse_config(docs[0]));
  CHECK(z2->antipode("(1,1)") == "1*(1,1)");
  CHECK(z2->verify(Suite::All, VerifyOptions{}).passed());
  CHECK(parse_suite("weakhopf") == Suite::WeakHopf);
  CHECK_FALSE(parse_suite("hopf"));
  CHECK(suite_name(Suite::Combinatorial) == "combinatorial");
}
