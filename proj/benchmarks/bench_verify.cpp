#include <benchmark/benchmark.h>

#include "overlap/chain.hpp"
#include "overlap/grids.hpp"
#include "overlap/labeling.hpp"

namespace {

void BM_VerifyPairwiseChain(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    overlap::BipartiteGraph g = overlap::chain_graph(n);
    overlap::Labeling l = overlap::chain_labeling(n);
    for (auto _ : state) benchmark::DoNotOptimize(overlap::detail::verify_pairwise(g, l));
}
BENCHMARK(BM_VerifyPairwiseChain)->Arg(100)->Arg(500);

void BM_VerifyBatchedChain(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    overlap::BipartiteGraph g = overlap::chain_graph(n);
    overlap::Labeling l = overlap::chain_labeling(n);
    for (auto _ : state) benchmark::DoNotOptimize(overlap::detail::verify_batched(g, l));
}
BENCHMARK(BM_VerifyBatchedChain)->Arg(100)->Arg(500)->Arg(2000);

void BM_VerifyTorus(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    overlap::BipartiteGraph g = overlap::toroidal_grid(4 * n, 4 * n).graph;
    overlap::Labeling l = overlap::torus_labeling(n);
    for (auto _ : state) benchmark::DoNotOptimize(overlap::verify(g, l));
}
BENCHMARK(BM_VerifyTorus)->Arg(1)->Arg(4)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
