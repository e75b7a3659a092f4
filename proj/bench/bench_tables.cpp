#include <benchmark/benchmark.h>

#include "qsheaf/calculus.hpp"
#include "qsheaf/parse.hpp"

using namespace qsheaf;

namespace {

const char* const kExpressions[] = {
    "Q4: quot(O, S1 + S2) + O(2) + S2(-1)",
    "Q5: quot(O(-1), S + O(3)) + res(S1 + S2(2))",
    "Q8: quot(S1(-1), O + O + O + O + O + O + O + O) + S2(3)",
};

// Cold-cache profile (plain and spinor-twisted tables) over a wide window.
void profile_kernel(benchmark::State& state, Execution ex) {
  const auto e = parse(kExpressions[state.range(0)]);
  const Window w{-40, 40};
  SheafCalculus calc;
  for (auto _ : state) {
    calc.clear_cache();
    benchmark::DoNotOptimize(calc.profile(e, w, ex));
  }
  state.SetLabel(e.to_string());
}

void BM_ProfileSerial(benchmark::State& state) { profile_kernel(state, Execution::Serial); }
void BM_ProfileParallel(benchmark::State& state) { profile_kernel(state, Execution::Parallel); }

}  // namespace

BENCHMARK(BM_ProfileSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ProfileParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
