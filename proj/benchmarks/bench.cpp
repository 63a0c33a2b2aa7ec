#include <benchmark/benchmark.h>

#include "recolor/decide.hpp"
#include "recolor/io.hpp"
#include "recolor/reduction.hpp"
#include "recolor/synthesis.hpp"

using namespace recolor;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

void BM_EnumerateColorings(benchmark::State& state) {
  const Graph g = path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_colorings(g, 3));
  state.SetComplexityN(state.range(0));
}

void BM_CensusCycle3(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    ConfigStats stats = components(g, 3);
    benchmark::DoNotOptimize(stats);
  }
}

void BM_CensusWheel4(benchmark::State& state) {
  const Graph g = join_clique(cycle(6), 1);
  for (auto _ : state) {
    ConfigStats stats = components(g, 4);
    benchmark::DoNotOptimize(stats);
  }
}

void BM_ReachableFarPair(benchmark::State& state) {
  const Graph g = cycle(4);
  const Coloring from{3, {0, 1, 0, 1}};
  const Coloring to{3, {1, 0, 1, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(reachable(g, 3, from, to));
}

void BM_ThreeToTwo(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    MixingVerdict v = three_to_two(g);
    benchmark::DoNotOptimize(v);
  }
}

void BM_SynthesizeK(benchmark::State& state) {
  const ReductionInstance inst = reduce(cycle(4), 4);
  const Coloring c1 = embed_coloring(inst, {3, {0, 1, 0, 1}}, {0, 1, 2}, {3});
  const Coloring c2 = embed_coloring(inst, {3, {1, 2, 1, 2}}, {1, 2, 3}, {0});
  for (auto _ : state) {
    RecoloringSequence s = synthesize_k(inst, c1, c2);
    benchmark::DoNotOptimize(s);
  }
}

void BM_ExportDot(benchmark::State& state) {
  const Graph g = cycle(6);
  for (auto _ : state) {
    std::string dot = export_config_dot(g, 3);
    benchmark::DoNotOptimize(dot);
  }
}

}  // namespace

BENCHMARK(BM_EnumerateColorings)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(BM_CensusCycle3)->Arg(6)->Arg(8)->Arg(10);
BENCHMARK(BM_CensusWheel4);
BENCHMARK(BM_ReachableFarPair);
BENCHMARK(BM_ThreeToTwo)->Arg(6)->Arg(8);
BENCHMARK(BM_SynthesizeK);
BENCHMARK(BM_ExportDot);

BENCHMARK_MAIN();
