#include <benchmark/benchmark.h>

#include "xscale/xscale.hpp"

namespace {

using namespace xscale;

void BM_KnnSearch(benchmark::State& state) {
  const int window = static_cast<int>(state.range(0));
  const auto pair = generate_synthetic(7, 256, 2);
  const Image down = bicubic_resample(pair.lr, 0.5);
  const Patch query = extract_patch(pair.lr, {40, 40, ScaleTag::kLr}, 3);
  for (auto _ : state) {
    auto found = knn_search(query, down, {20, 20, ScaleTag::kLrDown}, window, 5, 3);
    benchmark::DoNotOptimize(found);
  }
  state.SetItemsProcessed(state.iterations() * window * window);
}
BENCHMARK(BM_KnnSearch)->Arg(10)->Arg(20)->Arg(30);

void BM_BuildGraph(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const auto pair = generate_synthetic(7, size, 2);
  AggregationConfig cfg;
  cfg.threads = 1;
  const Image down = bicubic_resample(pair.lr, 0.5);
  for (auto _ : state) {
    auto graph = build_graph(pair.lr, down, cfg);
    benchmark::DoNotOptimize(graph);
  }
}
BENCHMARK(BM_BuildGraph)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
