#include <benchmark/benchmark.h>

#include "overlap/chain.hpp"

namespace {

void BM_BuildLengthSequence(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(overlap::build_length_sequence(r));
}
BENCHMARK(BM_BuildLengthSequence)->Arg(30)->Arg(100)->Arg(300);

void BM_ChainLabeling(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(overlap::chain_labeling(n));
}
BENCHMARK(BM_ChainLabeling)->Arg(100)->Arg(1000)->Arg(10000);

void BM_TotientSieve(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(overlap::totient_sieve(n));
}
BENCHMARK(BM_TotientSieve)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
