#include <benchmark/benchmark.h>

#include "quadsyn/fixtures.hpp"
#include "quadsyn/oracle.hpp"

namespace {

using quadsyn::Config;
using quadsyn::Exec;

const std::vector<Config>& corpus() {
  static const std::vector<Config> c = [] {
    std::vector<Config> v;
    for (std::uint64_t i = 0; i < 64; ++i) v.push_back(quadsyn::fuzz_config(7, i));
    return v;
  }();
  return c;
}

void BM_DecideBatch(benchmark::State& state) {
  const auto exec = state.range(0) == 0 ? Exec::Serial : Exec::Parallel;
  for (auto _ : state) benchmark::DoNotOptimize(quadsyn::decide_batch(corpus(), exec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus().size()));
}

void BM_OracleBatch(benchmark::State& state) {
  const auto exec = state.range(0) == 0 ? Exec::Serial : Exec::Parallel;
  for (auto _ : state) benchmark::DoNotOptimize(quadsyn::oracle_batch(corpus(), exec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus().size()));
}

void BM_GenericColumns(benchmark::State& state) {
  const Config pts = quadsyn::sample_on_quadric(3, 10);
  const quadsyn::DecideOptions opt{.record_trace = false, .parallel = state.range(0) != 0};
  for (auto _ : state) benchmark::DoNotOptimize(quadsyn::decide(pts, opt));
}

}  // namespace

BENCHMARK(BM_DecideBatch)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleBatch)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GenericColumns)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
