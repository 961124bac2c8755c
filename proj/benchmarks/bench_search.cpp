#include <benchmark/benchmark.h>

#include "ivspec/generators.hpp"
#include "ivspec/labeling.hpp"
#include "ivspec/rng.hpp"
#include "ivspec/search.hpp"

using namespace ivspec;

namespace {

SearchConfig unpruned() {
  SearchConfig cfg;
  cfg.prune = false;
  cfg.symmetry_reduction = false;
  cfg.stop_at_bound = false;
  return cfg;
}

} // namespace

static void BM_ExhaustivePruned(benchmark::State& state, GeneratorSpec spec) {
  const Graph g = generate(spec);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_max(g, SearchConfig{}));
}
BENCHMARK_CAPTURE(BM_ExhaustivePruned, cycle9, GeneratorSpec{CycleSpec{9}});
BENCHMARK_CAPTURE(BM_ExhaustivePruned, k33, GeneratorSpec{CompleteBipartiteSpec{3, 3}});
BENCHMARK_CAPTURE(BM_ExhaustivePruned, prism3, GeneratorSpec{PrismSpec{3}});

static void BM_ExhaustiveFull(benchmark::State& state, GeneratorSpec spec) {
  const Graph g = generate(spec);
  const SearchConfig cfg = unpruned();
  std::size_t leaves = 0;
  for (auto _ : state) leaves = exhaustive_max(g, cfg).explored;
  state.counters["leaves/s"] = benchmark::Counter(double(leaves) * state.iterations(),
                                                  benchmark::Counter::kIsRate);
}
BENCHMARK_CAPTURE(BM_ExhaustiveFull, k4, GeneratorSpec{CompleteSpec{4}});
BENCHMARK_CAPTURE(BM_ExhaustiveFull, k33, GeneratorSpec{CompleteBipartiteSpec{3, 3}})
    ->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveSharded(benchmark::State& state) {
  const Graph g = generate(CompleteBipartiteSpec{3, 3});
  SearchConfig cfg = unpruned();
  cfg.parallel_width = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_max(g, cfg));
}
BENCHMARK(BM_ExhaustiveSharded)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_Anneal(benchmark::State& state) {
  const Graph g = generate(PetersenSpec{});
  SearchConfig cfg;
  cfg.mode = SearchMode::anneal;
  cfg.seed = 42;
  cfg.max_moves = static_cast<std::size_t>(state.range(0));
  cfg.stop_at_bound = false;
  for (auto _ : state) benchmark::DoNotOptimize(anneal_max(g, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Anneal)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_IntervalVertices(benchmark::State& state) {
  const Graph g = generate(RandomRegularSpec{static_cast<std::size_t>(state.range(0)), 4, 1});
  Rng rng(3);
  const EdgeLabeling phi = random_labeling(g, rng);
  for (auto _ : state) benchmark::DoNotOptimize(interval_vertices(g, phi));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IntervalVertices)->RangeMultiplier(8)->Range(16, 4096);

BENCHMARK_MAIN();
