#pragma once

#include <random>
#include <utility>
#include <vector>

#include "overlap/bipartite_graph.hpp"
#include "overlap/graph_ops.hpp"

namespace overlap::testsupport {

/// Modulo on the raw engine keeps draws identical across standard
/// libraries; distribution classes do not guarantee that.
inline int draw(std::mt19937& gen, int bound) {
    return static_cast<int>(gen() % static_cast<unsigned>(bound));
}

inline BipartiteGraph random_graph(std::mt19937& gen, int ns, int np, int percent) {
    BipartiteGraph g(ns, np);
    for (int s = 0; s < ns; ++s)
        for (int p = 0; p < np; ++p)
            if (draw(gen, 100) < percent) g.add_edge(s, p);
    return g;
}

inline BipartiteGraph random_connected_twin_free(std::mt19937& gen, int max_ns, int max_np) {
    for (;;) {
        int ns = 1 + draw(gen, max_ns);
        int np = 1 + draw(gen, max_np);
        BipartiteGraph g = random_graph(gen, ns, np, 25 + draw(gen, 55));
        if (is_connected(g) && is_twin_free(g)) return g;
    }
}

/// Independent pattern counters from raw vertex subsets, for
/// cross-checking enumerate_patterns.
inline long long count_c4(const BipartiteGraph& g) {
    long long count = 0;
    for (int s1 = 0; s1 < g.ns(); ++s1)
        for (int s2 = s1 + 1; s2 < g.ns(); ++s2)
            for (int p1 = 0; p1 < g.np(); ++p1)
                for (int p2 = p1 + 1; p2 < g.np(); ++p2)
                    if (g.has_edge(s1, p1) && g.has_edge(s1, p2) && g.has_edge(s2, p1) &&
                        g.has_edge(s2, p2))
                        ++count;
    return count;
}

template <class F>
void for_each_3x3(const BipartiteGraph& g, F&& f) {
    for (int a = 0; a < g.ns(); ++a)
        for (int b = a + 1; b < g.ns(); ++b)
            for (int c = b + 1; c < g.ns(); ++c)
                for (int d = 0; d < g.np(); ++d)
                    for (int e = d + 1; e < g.np(); ++e)
                        for (int h = e + 1; h < g.np(); ++h) {
                            int ss[3] = {a, b, c};
                            int pp[3] = {d, e, h};
                            f(ss, pp);
                        }
}

inline long long count_c6(const BipartiteGraph& g) {
    long long count = 0;
    for_each_3x3(g, [&](const int* ss, const int* pp) {
        int row[3] = {0, 0, 0};
        int col[3] = {0, 0, 0};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (g.has_edge(ss[i], pp[j])) {
                    ++row[i];
                    ++col[j];
                }
        if (row[0] == 2 && row[1] == 2 && row[2] == 2 && col[0] == 2 && col[1] == 2 &&
            col[2] == 2)
            ++count;
    });
    return count;
}

inline long long count_domino(const BipartiteGraph& g) {
    long long count = 0;
    for_each_3x3(g, [&](const int* ss, const int* pp) {
        int edges = 0;
        std::vector<std::pair<int, int>> zeros;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (g.has_edge(ss[i], pp[j]))
                    ++edges;
                else
                    zeros.emplace_back(i, j);
            }
        if (edges == 7 && zeros[0].first != zeros[1].first &&
            zeros[0].second != zeros[1].second)
            ++count;
    });
    return count;
}

inline long long count_fork_one_side(const BipartiteGraph& g) {
    long long count = 0;
    for (int c = 0; c < g.ns(); ++c) {
        std::vector<int> nc = g.s_neighbors(c);
        if (static_cast<int>(nc.size()) < 3) continue;
        for (int t = 0; t < g.ns(); ++t) {
            if (t == c) continue;
            for (int stem : nc) {
                if (!g.has_edge(t, stem)) continue;
                std::vector<int> rest;
                for (int x : nc)
                    if (x != stem && !g.has_edge(t, x)) rest.push_back(x);
                long long choices = static_cast<long long>(rest.size());
                count += choices * (choices - 1) / 2;
            }
        }
    }
    return count;
}

inline long long count_fork(const BipartiteGraph& g) {
    return count_fork_one_side(g) + count_fork_one_side(g.transposed());
}

}  // namespace overlap::testsupport
