// Serial vs OpenMP timings for the table sweeps.
#include <benchmark/benchmark.h>

#include "hypgreen/sweep.hpp"

using namespace hypgreen;

namespace {

sweep::ExecPolicy policy_of(const benchmark::State& st) {
  return st.range(0) ? sweep::ExecPolicy::parallel : sweep::ExecPolicy::serial;
}

void BM_GreenTable(benchmark::State& st) {
  auto rhos = sweep::GridSpec{1e-2, 20.0, 200, sweep::Spacing::geometric}.points();
  for (auto _ : st) {
    auto rows = sweep::green_table(Dimension(11), GjmsOrder(3), rhos, policy_of(st));
    benchmark::DoNotOptimize(rows.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(rhos.size()));
}

void BM_LambdaTable(benchmark::State& st) {
  for (auto _ : st) {
    auto rows = sweep::lambda_table(6, policy_of(st));
    benchmark::DoNotOptimize(rows.data());
  }
}

}  // namespace

BENCHMARK(BM_GreenTable)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LambdaTable)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
