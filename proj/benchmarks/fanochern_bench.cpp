#include <benchmark/benchmark.h>

#include "fanochern/chern_calculus.hpp"
#include "fanochern/coefficients.hpp"
#include "fanochern/combinatorics.hpp"

namespace {

using namespace fanochern;

// The Bernoulli cache is process-wide, so after the first iteration this
// measures lookups plus copies.
void BM_BernoulliTable(benchmark::State& state) {
  const auto max_m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli_table(max_m));
}
BENCHMARK(BM_BernoulliTable)->Arg(10)->Arg(100)->Arg(400);

void BM_PowerSum(benchmark::State& state) {
  const auto j = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(power_sum(1'000'000, j, SumBound::inclusive));
}
BENCHMARK(BM_PowerSum)->Arg(2)->Arg(10)->Arg(40);

void BM_RowColdTable(benchmark::State& state) {
  const int i = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CoefficientTable table;
    benchmark::DoNotOptimize(table.row(i, 2));
  }
}
BENCHMARK(BM_RowColdTable)->RangeMultiplier(2)->Range(4, 64)->Unit(benchmark::kMillisecond);

void BM_Fill(benchmark::State& state) {
  const int i_max = static_cast<int>(state.range(0));
  const unsigned workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    CoefficientTable table;
    table.fill(i_max, 2, workers);
    benchmark::DoNotOptimize(table.size());
  }
}
BENCHMARK(BM_Fill)->Args({32, 1})->Args({64, 1})->Args({64, 4})->Unit(benchmark::kMillisecond);

void BM_VerifyPositivity(benchmark::State& state) {
  const int i_hi = static_cast<int>(state.range(0));
  const unsigned workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    const auto report = verify_positivity({1, i_hi, {1, 2}, true, workers});
    benchmark::DoNotOptimize(report.coefficients_checked);
  }
  state.counters["coefficients"] = static_cast<double>(i_hi) * (i_hi + 4);
}
BENCHMARK(BM_VerifyPositivity)->Args({25, 1})->Args({50, 1})->Args({50, 4})->Unit(benchmark::kMillisecond);

void BM_ExpandChain(benchmark::State& state) {
  const auto config = ChainConfig::all_ones(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expand_chain(config, 2));
}
BENCHMARK(BM_ExpandChain)->DenseRange(2, 10, 4)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
