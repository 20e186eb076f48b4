#include <benchmark/benchmark.h>

#include "augpath/alt_search.hpp"
#include "augpath/cuts.hpp"
#include "augpath/generators.hpp"
#include "augpath/pipeline.hpp"

using namespace augpath;

namespace {

// Matching of the last stage that still leaves vertices unmatched.
Matching late_stage_matching(const Graph& g) {
  PipelineOptions opt;
  opt.keep_matchings = true;
  const PipelineResult r = run_pipeline(g, opt);
  for (auto it = r.matchings.rbegin(); it != r.matchings.rend(); ++it)
    if (!it->is_perfect()) return *it;
  return r.matchings.front();
}

void BM_ShortestAugmenting(benchmark::State& state) {
  const Graph g = random_regular(static_cast<Vertex>(state.range(0)), 3, 1);
  const Matching m = late_stage_matching(g);
  const VertexSet seeds = m.unmatched_vertices();
  for (auto _ : state) benchmark::DoNotOptimize(shortest_augmenting_path(g, m, seeds, 201));
}
BENCHMARK(BM_ShortestAugmenting)->Arg(1 << 10)->Arg(1 << 12)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

void BM_MaximumMatching(benchmark::State& state) {
  const Graph g = random_regular(static_cast<Vertex>(state.range(0)), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(maximum_matching(g));
}
BENCHMARK(BM_MaximumMatching)->Arg(1 << 10)->Arg(1 << 12)->Unit(benchmark::kMillisecond);

void BM_Pipeline(benchmark::State& state) {
  const Graph g = random_regular(static_cast<Vertex>(state.range(0)), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(g, 1 << 20));
}
BENCHMARK(BM_Pipeline)->Arg(1 << 10)->Arg(1 << 12)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

void BM_SpectralBound(benchmark::State& state) {
  const Graph g = random_regular(static_cast<Vertex>(state.range(0)), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_expansion_lower(g, 1e-2));
}
BENCHMARK(BM_SpectralBound)->Arg(1 << 10)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

void BM_ExactOddCut(benchmark::State& state) {
  const Graph g = random_regular(static_cast<Vertex>(state.range(0)), 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(min_odd_cut(g));
}
BENCHMARK(BM_ExactOddCut)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
