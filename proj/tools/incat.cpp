// Command-line front end: verification suites, coproduct and antipode queries,
// and replayable demos. Exit codes: 0 pass, 1 verification failure, 2 usage or
// configuration error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "incat/config.hpp"
#include "incat/demo.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

int cmd_verify(const std::string& path, const std::string& suite_text, std::optional<int> max_size,
               std::uint64_t seed, std::optional<std::size_t> sample, bool serial, bool verbose,
               const std::string& out_path) {
  auto suite = incat::parse_suite(suite_text);
  if (!suite) throw incat::PreconditionViolation("unknown suite '" + suite_text + "'");
  auto instance = incat::make_instance(incat::load_config(path));
  incat::VerifyOptions options;
  options.max_size = max_size;
  options.seed = seed;
  options.sample = sample;
  options.exec = serial ? incat::Exec::Serial : incat::Exec::Parallel;

  const auto t0 = std::chrono::steady_clock::now();
  incat::Report report = instance->verify(*suite, options);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::cout << report.to_text(verbose);
  std::cerr << "elapsed: " << seconds << " s\n";
  if (!out_path.empty()) {
    auto j = report.to_json();
    j["kind"] = instance->kind();
    j["suite"] = incat::suite_name(*suite);
    j["seed"] = seed;
    j["elapsed_seconds"] = seconds;
    std::ofstream out(out_path);
    if (!out) throw incat::PreconditionViolation("cannot write " + out_path);
    out << j.dump(2) << "\n";
  }
  return report.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"incat: incidence bialgebras of monoidal categories"};
  app.require_subcommand(1);

  std::string config, suite = "all", out_path, morphism, formula = "theorem", demo;
  std::optional<int> max_size;
  std::optional<std::size_t> sample;
  std::uint64_t seed = 0;
  bool serial = false, verbose = false;

  auto* verify = app.add_subcommand("verify", "run verification suites on an instance");
  verify->add_option("config", config, "instance config (JSON)")->required();
  verify->add_option("--suite", suite, "coalgebra|bialgebra|weakhopf|combinatorial|all")
      ->check(CLI::IsMember({"coalgebra", "bialgebra", "weakhopf", "combinatorial", "all"}));
  verify->add_option("--max-size", max_size, "fragment bound")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "seed for sampling");
  verify->add_option("--sample", sample, "check a seeded random sample of this many morphisms");
  verify->add_option("--out", out_path, "write a JSON report");
  verify->add_flag("--serial", serial, "run checks on one thread");
  verify->add_flag("-v,--verbose", verbose, "list every finding");

  auto* coproduct = app.add_subcommand("coproduct", "print the coproduct of a morphism");
  coproduct->add_option("config", config, "instance config (JSON)")->required();
  coproduct->add_option("--morphism,-m", morphism, "morphism literal")->required();

  auto* antipode = app.add_subcommand("antipode", "print the antipode of a morphism");
  antipode->add_option("config", config, "instance config (JSON)")->required();
  antipode->add_option("--morphism,-m", morphism, "morphism literal")->required();
  antipode->add_option("--formula", formula, "2-groups: theorem (f̄⁻¹) or corollary")
      ->check(CLI::IsMember({"theorem", "corollary"}));

  auto* demo_cmd = app.add_subcommand("demo", "replay a worked example");
  demo_cmd->add_option("name", demo, "monex|skew|forest-ck|bigraph-react|quiver-fail|xmod-s3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return cmd_verify(config, suite, max_size, seed, sample, serial, verbose, out_path);
    if (*coproduct) {
      std::cout << incat::make_instance(incat::load_config(config))->coproduct(morphism) << "\n";
      return kPass;
    }
    if (*antipode) {
      std::cout << incat::make_instance(incat::load_config(config))->antipode(morphism, formula == "corollary")
                << "\n";
      return kPass;
    }
    if (*demo_cmd) {
      std::cout << incat::run_demo(demo);
      return kPass;
    }
  } catch (const incat::Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
