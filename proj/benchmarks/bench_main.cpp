#include <benchmark/benchmark.h>

#include "coarse/filtration.hpp"
#include "coarse/gallery.hpp"
#include "coarse/rips.hpp"

using namespace coarse;

static void BM_PathMetricCombQuotient(benchmark::State& state) {
  const Comb c = comb(state.range(0));
  const WeightedGraph g = quotient_space(c.identity, 2).graph;
  for (auto _ : state) benchmark::DoNotOptimize(path_metric(g));
  state.counters["vertices"] = static_cast<double>(g.vertex_count());
}
BENCHMARK(BM_PathMetricCombQuotient)->Arg(4)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_QuotientProfileComb(benchmark::State& state) {
  const Comb c = comb(state.range(0));
  const std::vector<Dist> grid{2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(quotient_stability_profile(c.identity, grid, c.interior));
}
BENCHMARK(BM_QuotientProfileComb)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_KernelProfileHeisenberg(benchmark::State& state) {
  const int R = static_cast<int>(state.range(0));
  const HeisenbergBall ball = heisenberg(R);
  const std::vector<Dist> grid{0, 1, 2, 3};
  const Window w = ball.ball(R - 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_stability_profile(ball.projection, grid, w));
}
BENCHMARK(BM_KernelProfileHeisenberg)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_KernelProfileCombRetraction(benchmark::State& state) {
  const CombRetraction r = comb_retraction(state.range(0));
  const std::vector<Dist> grid{2, 3};
  for (auto _ : state)
    benchmark::DoNotOptimize(kernel_stability_profile(r.retraction, grid, r.comb.interior));
}
BENCHMARK(BM_KernelProfileCombRetraction)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_AugmentedRipsComb(benchmark::State& state) {
  const Comb c = comb(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(augmented_rips(c.identity, WeightFunction::exp2(), 3));
}
BENCHMARK(BM_AugmentedRipsComb)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
