#include <benchmark/benchmark.h>

#include <random>

#include "overlap/bipartite_graph.hpp"
#include "overlap/graph_ops.hpp"
#include "overlap/grids.hpp"
#include "overlap/patterns.hpp"
#include "overlap/readability2.hpp"

namespace {

overlap::BipartiteGraph grid_strip(int n) {
    overlap::GridGraphSpec spec;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < n; ++c) spec.cells.emplace_back(r, c);
    return overlap::grid_graph(spec).graph;
}

overlap::BipartiteGraph random_instance(int side, unsigned seed) {
    std::mt19937 gen(seed);
    while (true) {
        overlap::BipartiteGraph g(side, side);
        for (int s = 0; s < side; ++s)
            for (int p = 0; p < side; ++p)
                if (gen() % 100 < 40) g.add_edge(s, p);
        if (overlap::is_connected(g)) return g;
    }
}

void BM_DecideGridStrip(benchmark::State& state) {
    overlap::BipartiteGraph g = grid_strip(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(overlap::decide_readability_le2(g));
}
BENCHMARK(BM_DecideGridStrip)->Arg(8)->Arg(32)->Arg(128);

void BM_DecideRandom(benchmark::State& state) {
    overlap::BipartiteGraph g = random_instance(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(overlap::decide_readability_le2(g));
}
BENCHMARK(BM_DecideRandom)->Arg(6)->Arg(10)->Arg(14);

void BM_EnumerateC4(benchmark::State& state) {
    overlap::BipartiteGraph g = random_instance(static_cast<int>(state.range(0)), 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(overlap::enumerate_patterns(g, overlap::PatternKind::C4));
}
BENCHMARK(BM_EnumerateC4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
