#include "happy/constructor.hpp"
#include "happy/cycle_graph.hpp"
#include "happy/happy_tree.hpp"
#include "happy/numerals.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_HappyStep(benchmark::State& state) {
  const happy::Params p(2, 30);
  const happy::BigInt n("838259");
  for (auto _ : state) benchmark::DoNotOptimize(happy::happy_step(n, p));
}
BENCHMARK(BM_HappyStep);

void BM_HappyStepHuge(benchmark::State& state) {
  const happy::Params p(2, 30);
  // ~1000 base-30 digits
  const happy::BigInt n = happy::greedy_preimage(happy::BigInt(838259), p);
  for (auto _ : state) benchmark::DoNotOptimize(happy::happy_step(n, p));
}
BENCHMARK(BM_HappyStepHuge);

void BM_Orbit2005(benchmark::State& state) {
  const happy::Params p(2, 30);
  for (auto _ : state) benchmark::DoNotOptimize(happy::orbit(happy::BigInt(2005), p));
}
BENCHMARK(BM_Orbit2005);

void BM_CensusBase30(benchmark::State& state) {
  const happy::Params p(2, 30);
  for (auto _ : state) benchmark::DoNotOptimize(happy::find_all_cycles(p));
}
BENCHMARK(BM_CensusBase30);

void BM_GreedyPreimage(benchmark::State& state) {
  const happy::Params p(2, 30);
  const happy::BigInt n(838259);
  for (auto _ : state) benchmark::DoNotOptimize(happy::greedy_preimage(n, p));
}
BENCHMARK(BM_GreedyPreimage);

void BM_BuildBinaryTree(benchmark::State& state) {
  const happy::Params p(2, 2);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(happy::build_tree(p, k));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildBinaryTree)->Arg(8)->Arg(10)->Arg(12);

void BM_CountChildrenGeneral(benchmark::State& state) {
  const happy::Params p(2, 30);
  for (auto _ : state)
    benchmark::DoNotOptimize(happy::count_children_general(happy::BigInt(586), p, 7));
}
BENCHMARK(BM_CountChildrenGeneral);

void BM_BuildCycleGraph(benchmark::State& state) {
  const happy::Params p(2, 8);
  const happy::Cycle cycle{{happy::BigInt(13), happy::BigInt(26)}};
  for (auto _ : state) benchmark::DoNotOptimize(happy::build_cycle_graph(p, 3, cycle));
}
BENCHMARK(BM_BuildCycleGraph);

}  // namespace

BENCHMARK_MAIN();
