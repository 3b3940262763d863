// Serial-vs-parallel comparison for the three data-parallel kernels: the
// edge-subset divergence scan, the per-degree splitting loop, and the
// five-circle sweep. Run with --benchmark_filter=... to isolate one kernel.

#include <benchmark/benchmark.h>

#include <hopfren/graph_hopf.hpp>
#include <hopfren/hopf.hpp>
#include <hopfren/resolvents.hpp>

using namespace hopfren;

namespace {

// Chain of k two-vertex bubbles joined by single propagators, one external
// leg at each end; 3k - 1 internal edges, so k = 6 drives a 2^17 subset scan.
FeynGraph bubbleChain(int k) {
  std::vector<VertexType> types(static_cast<std::size_t>(2 * k), VertexType::V3);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> legs(static_cast<std::size_t>(2 * k), 0);
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(2 * i, 2 * i + 1);
    edges.emplace_back(2 * i, 2 * i + 1);
    if (i + 1 < k) edges.emplace_back(2 * i + 1, 2 * i + 2);
  }
  legs.front() = 1;
  legs.back() = 1;
  return FeynGraph(std::move(types), std::move(edges), std::move(legs));
}

void subsetScan(benchmark::State& state, Parallelism mode) {
  FeynGraph g = bubbleChain(6);
  for (auto _ : state) {
    auto subsets = divergentSubgraphs(g, mode);
    benchmark::DoNotOptimize(subsets);
  }
}

void treeSplit(benchmark::State& state, Parallelism mode) {
  auto inst = treeInstance();
  inst->prefetchDegree(6);  // charge both variants the same cache state
  Character phi = toyTreeCharacter(inst, 6, 10);
  for (auto _ : state) {
    BirkhoffPair pair = birkhoff(phi, mode);
    benchmark::DoNotOptimize(pair);
  }
}

void starSweepBench(benchmark::State& state, Parallelism mode) {
  for (auto _ : state) {
    auto deviations = starSweep(200, 97531ull, mode);
    benchmark::DoNotOptimize(deviations);
  }
}

void BM_SubsetScan_Serial(benchmark::State& s) { subsetScan(s, Parallelism::Serial); }
void BM_SubsetScan_Parallel(benchmark::State& s) { subsetScan(s, Parallelism::Parallel); }
void BM_TreeSplit_Serial(benchmark::State& s) { treeSplit(s, Parallelism::Serial); }
void BM_TreeSplit_Parallel(benchmark::State& s) { treeSplit(s, Parallelism::Parallel); }
void BM_StarSweep_Serial(benchmark::State& s) { starSweepBench(s, Parallelism::Serial); }
void BM_StarSweep_Parallel(benchmark::State& s) { starSweepBench(s, Parallelism::Parallel); }

BENCHMARK(BM_SubsetScan_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsetScan_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TreeSplit_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TreeSplit_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StarSweep_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StarSweep_Parallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
