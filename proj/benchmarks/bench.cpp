#include <benchmark/benchmark.h>

#include "toplat/corpus.hpp"
#include "toplat/lattice.hpp"
#include "toplat/set_topology.hpp"
#include "toplat/topology.hpp"

using namespace toplat;

static void BM_AllSubgroups(benchmark::State& state) {
  const auto g = parse_group("Z2^5");
  for (auto _ : state) benchmark::DoNotOptimize(all_subgroups(g).size());
}
BENCHMARK(BM_AllSubgroups)->Unit(benchmark::kMillisecond);

static void BM_TopologyLattice(benchmark::State& state) {
  const auto g = parse_group("Z3^2 x D4");
  for (auto _ : state) benchmark::DoNotOptimize(TopologyLattice(g).size());
}
BENCHMARK(BM_TopologyLattice)->Unit(benchmark::kMillisecond);

static void BM_ModularCheck(benchmark::State& state) {
  const TopologyLattice tl(parse_group("Z2^5"));
  for (auto _ : state) benchmark::DoNotOptimize(is_modular(tl.lattice()));
}
BENCHMARK(BM_ModularCheck)->Unit(benchmark::kMillisecond);

static void BM_JordanHolder(benchmark::State& state) {
  const TopologyLattice tl(parse_group("Z2^5"));
  const auto& l = tl.lattice();
  for (auto _ : state) benchmark::DoNotOptimize(jordan_holder_check(l, l.bottom(), l.top()).uniform);
}
BENCHMARK(BM_JordanHolder)->Unit(benchmark::kMillisecond);

static void BM_EnumerateTopologies(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_topologies(n).size());
}
BENCHMARK(BM_EnumerateTopologies)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_Merzon(benchmark::State& state) {
  const auto g = parse_group("D 8");
  for (auto _ : state) benchmark::DoNotOptimize(verify_merzon(g).checked);
}
BENCHMARK(BM_Merzon)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
