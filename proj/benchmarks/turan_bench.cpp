#include <benchmark/benchmark.h>

#include "turan/bounds.hpp"
#include "turan/evalkernel.hpp"
#include "turan/families.hpp"
#include "turan/zerofinder.hpp"

namespace {

using namespace turan;

void BM_EvalSequence(benchmark::State& state) {
  const RecurrenceSpec h = make_builtin("hermite-monic");
  const int k = static_cast<int>(state.range(0));
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_sequence(h, k, x));
    x += 1e-9;
  }
  state.SetComplexityN(k);
}
BENCHMARK(BM_EvalSequence)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

void BM_TuranT2(benchmark::State& state) {
  const RecurrenceSpec h = make_builtin("hermite-monic");
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(turan_T2(h, k, 1.25));
}
BENCHMARK(BM_TuranT2)->Arg(50)->Arg(500);

void BM_ExtremeZeros(benchmark::State& state) {
  const RecurrenceSpec h = make_builtin("hermite-monic");
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extreme_zeros(h, k));
}
BENCHMARK(BM_ExtremeZeros)->Arg(10)->Arg(100)->Arg(1000);

void BM_AllZeros(benchmark::State& state) {
  const RecurrenceSpec h = make_builtin("hermite-monic");
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeros(h, k));
}
BENCHMARK(BM_AllZeros)->Arg(20)->Arg(200);

void BM_BoundSweep(benchmark::State& state) {
  const RecurrenceSpec h = make_builtin("hermite-monic");
  for (auto _ : state) {
    for (int k = 2; k <= 200; ++k) {
      benchmark::DoNotOptimize(bound_vir1(h, k));
      benchmark::DoNotOptimize(bound_thmain(h, k));
      benchmark::DoNotOptimize(bound_condsimpl(h, k));
    }
  }
}
BENCHMARK(BM_BoundSweep);

}  // namespace

BENCHMARK_MAIN();
