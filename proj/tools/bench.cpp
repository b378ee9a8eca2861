// Serial reference kernels against their OpenMP counterparts on the fragments
// used by the verification suites.

#include <benchmark/benchmark.h>

#include "incat/forest.hpp"
#include "incat/incidence.hpp"
#include "incat/relmonoid.hpp"
#include "incat/skew.hpp"

using namespace incat;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void BM_SkewCoalgebra(benchmark::State& state) {
  SkewCategory sk;
  auto frag = sk.shapes_up_to(5);
  Incidence<SkewCategory> inc(sk, Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(check_coalgebra(inc, frag, mode(state)));
  state.SetLabel(mode(state) == Exec::Serial ? "serial" : "parallel");
}

void BM_ForestCombinatorial(benchmark::State& state) {
  ForestCategory fc;
  auto frag = fc.forests(3, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_combinatorial(fc, frag, mode(state)));
  state.SetLabel(mode(state) == Exec::Serial ? "serial" : "parallel");
}

void BM_MonexBialgebra(benchmark::State& state) {
  FreeMonoidCategory c("xy");
  auto frag = c.morphisms_up_to(3);
  Incidence<FreeMonoidCategory> inc(c, Rational(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(check_bialgebra(inc, frag, PairScope::ProductInSample, mode(state)));
  state.SetLabel(mode(state) == Exec::Serial ? "serial" : "parallel");
}

}  // namespace

BENCHMARK(BM_SkewCoalgebra)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ForestCombinatorial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonexBialgebra)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
