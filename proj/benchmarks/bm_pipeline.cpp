#include <benchmark/benchmark.h>

#include "xscale/xscale.hpp"

namespace {

using namespace xscale;

void BM_BicubicUpsample(benchmark::State& state) {
  const auto pair = generate_synthetic(3, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bicubic_resample(pair.lr, 2.0));
  }
}
BENCHMARK(BM_BicubicUpsample)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SuperResolve(benchmark::State& state) {
  const auto pair = generate_synthetic(3, static_cast<int>(state.range(0)), 2);
  AggregationConfig cfg;
  cfg.threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(super_resolve(pair.lr, cfg));
  }
}
BENCHMARK(BM_SuperResolve)
    ->Args({128, 1})
    ->Args({256, 1})
    ->Args({256, 0})
    ->Unit(benchmark::kMillisecond);

void BM_SameScaleKnn(benchmark::State& state) {
  const auto pair = generate_synthetic(3, 256, 2);
  AggregationConfig cfg;
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(same_scale_knn(pair.lr, cfg));
  }
}
BENCHMARK(BM_SameScaleKnn)->Unit(benchmark::kMillisecond);

}  // namespace
