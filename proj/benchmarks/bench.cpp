#include <benchmark/benchmark.h>

#include "matchkit/corpus.hpp"
#include "matchkit/families.hpp"
#include "matchkit/graph6.hpp"
#include "matchkit/matching.hpp"
#include "matchkit/properties.hpp"

using namespace matchkit;

static void BM_MaximumMatchingFamilyG(benchmark::State& state) {
  Graph g = family_G(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(maximum_matching(g).size());
}
BENCHMARK(BM_MaximumMatchingFamilyG)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

static void BM_ExtendabilityDecider(benchmark::State& state) {
  Graph g = family_G(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(is_k_extendable(g, static_cast<int>(state.range(0))).holds);
}
BENCHMARK(BM_ExtendabilityDecider)->Arg(2)->Arg(3);

static void BM_MatchingEnumeration(benchmark::State& state) {
  Graph g = Graph::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::uint64_t count = 0;
    enumerate_matchings(g, 3, [&](const Matching&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_MatchingEnumeration)->Arg(8)->Arg(10)->Arg(12);

static void BM_Graph6RoundTrip(benchmark::State& state) {
  std::string g6 = to_graph6(family_H(static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(to_graph6(from_graph6(g6)));
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(2)->Arg(8)->Arg(14);

static void BM_LabeledEnumeration(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t connected = 0;
    std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask)
      if (is_connected(labeled_graph_from_mask(n, mask))) ++connected;
    benchmark::DoNotOptimize(connected);
  }
}
BENCHMARK(BM_LabeledEnumeration)->Arg(4)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
