#include "overlap/graph_ops.hpp"

#include <algorithm>
#include <cstring>
#include <queue>
#include <stdexcept>

namespace overlap {

namespace {

bool rows_equal(const std::uint64_t* a, const std::uint64_t* b, int words) {
    return std::memcmp(a, b, static_cast<std::size_t>(words) * sizeof(std::uint64_t)) == 0;
}

bool row_empty(const std::uint64_t* a, int words) {
    for (int w = 0; w < words; ++w)
        if (a[w]) return false;
    return true;
}

/// Labels every vertex with a component id, ids issued in discovery order
/// over V_s then V_p.
std::pair<std::vector<int>, std::vector<int>> component_ids(const BipartiteGraph& g,
                                                            int& count) {
    std::vector<int> sid(g.ns(), -1), pid(g.np(), -1);
    count = 0;
    std::queue<VertexRef> queue;
    auto flood = [&](VertexRef start) {
        int id = count++;
        queue.push(start);
        (start.side == Side::S ? sid[start.index] : pid[start.index]) = id;
        while (!queue.empty()) {
            VertexRef v = queue.front();
            queue.pop();
            if (v.side == Side::S) {
                for (int p : g.s_neighbors(v.index))
                    if (pid[p] < 0) {
                        pid[p] = id;
                        queue.push({Side::P, p});
                    }
            } else {
                for (int s : g.p_neighbors(v.index))
                    if (sid[s] < 0) {
                        sid[s] = id;
                        queue.push({Side::S, s});
                    }
            }
        }
    };
    for (int s = 0; s < g.ns(); ++s)
        if (sid[s] < 0) flood({Side::S, s});
    for (int p = 0; p < g.np(); ++p)
        if (pid[p] < 0) flood({Side::P, p});
    return {std::move(sid), std::move(pid)};
}

}  // namespace

std::vector<ComponentSplit> connected_components(const BipartiteGraph& g) {
    int count = 0;
    auto [sid, pid] = component_ids(g, count);
    std::vector<ComponentSplit> out(count);
    for (int s = 0; s < g.ns(); ++s) out[sid[s]].s_map.push_back(s);
    for (int p = 0; p < g.np(); ++p) out[pid[p]].p_map.push_back(p);
    for (auto& comp : out) {
        comp.graph = BipartiteGraph(static_cast<int>(comp.s_map.size()),
                                    static_cast<int>(comp.p_map.size()));
        for (int ls = 0; ls < static_cast<int>(comp.s_map.size()); ++ls) {
            std::vector<int> nbrs = g.s_neighbors(comp.s_map[ls]);
            for (int p : nbrs) {
                auto it = std::lower_bound(comp.p_map.begin(), comp.p_map.end(), p);
                comp.graph.add_edge(ls, static_cast<int>(it - comp.p_map.begin()));
            }
        }
    }
    return out;
}

bool is_connected(const BipartiteGraph& g) {
    int count = 0;
    component_ids(g, count);
    return count <= 1;
}

TwinClasses twin_classes(const BipartiteGraph& g) {
    TwinClasses tc;
    tc.s_class_of.assign(g.ns(), -1);
    tc.p_class_of.assign(g.np(), -1);
    for (int s = 0; s < g.ns(); ++s) {
        if (tc.s_class_of[s] >= 0) continue;
        int id = static_cast<int>(tc.s_classes.size());
        tc.s_classes.push_back({s});
        tc.s_class_of[s] = id;
        for (int t = s + 1; t < g.ns(); ++t)
            if (tc.s_class_of[t] < 0 && rows_equal(g.s_row(s), g.s_row(t), g.s_row_words())) {
                tc.s_class_of[t] = id;
                tc.s_classes[id].push_back(t);
            }
    }
    for (int p = 0; p < g.np(); ++p) {
        if (tc.p_class_of[p] >= 0) continue;
        int id = static_cast<int>(tc.p_classes.size());
        tc.p_classes.push_back({p});
        tc.p_class_of[p] = id;
        for (int q = p + 1; q < g.np(); ++q)
            if (tc.p_class_of[q] < 0 && rows_equal(g.p_row(p), g.p_row(q), g.p_row_words())) {
                tc.p_class_of[q] = id;
                tc.p_classes[id].push_back(q);
            }
    }
    return tc;
}

bool is_twin_free(const BipartiteGraph& g) {
    TwinClasses tc = twin_classes(g);
    return static_cast<int>(tc.s_classes.size()) == g.ns() &&
           static_cast<int>(tc.p_classes.size()) == g.np();
}

TwinFreeReduction twin_free_reduction(const BipartiteGraph& g) {
    TwinFreeReduction red;
    red.classes = twin_classes(g);
    red.graph = BipartiteGraph(static_cast<int>(red.classes.s_classes.size()),
                               static_cast<int>(red.classes.p_classes.size()));
    for (int c = 0; c < static_cast<int>(red.classes.s_classes.size()); ++c) {
        int rep = red.classes.s_classes[c][0];
        for (int p : g.s_neighbors(rep)) {
            int pc = red.classes.p_class_of[p];
            if (red.classes.p_classes[pc][0] == p) red.graph.add_edge(c, pc);
        }
    }
    return red;
}

bool is_p4_free(const BipartiteGraph& g) {
    // P4-free iff same-side neighborhoods are pairwise disjoint or equal.
    int words = g.s_row_words();
    for (int a = 0; a < g.ns(); ++a) {
        const std::uint64_t* ra = g.s_row(a);
        if (row_empty(ra, words)) continue;
        for (int b = a + 1; b < g.ns(); ++b) {
            const std::uint64_t* rb = g.s_row(b);
            bool meets = false, equal = true;
            for (int w = 0; w < words; ++w) {
                if (ra[w] & rb[w]) meets = true;
                if (ra[w] != rb[w]) equal = false;
            }
            if (meets && !equal) return false;
        }
    }
    return true;
}

bool is_biclique_union(const BipartiteGraph& g) {
    for (const ComponentSplit& comp : connected_components(g)) {
        long long full = static_cast<long long>(comp.graph.ns()) * comp.graph.np();
        if (comp.graph.ns() + comp.graph.np() == 1) continue;
        if (comp.graph.edge_count() != full) return false;
    }
    return true;
}

std::optional<std::array<VertexRef, 4>> find_induced_p4(const BipartiteGraph& g) {
    // Middle edge (u, v); x1 in N(u) \ {v}, x4 in N(v) \ {u}, (x4, x1) absent.
    for (int u = 0; u < g.ns(); ++u)
        for (int v : g.s_neighbors(u))
            for (int x1 : g.s_neighbors(u)) {
                if (x1 == v) continue;
                for (int x4 : g.p_neighbors(v)) {
                    if (x4 == u || g.has_edge(x4, x1)) continue;
                    return std::array<VertexRef, 4>{VertexRef{Side::P, x1},
                                                    VertexRef{Side::S, u},
                                                    VertexRef{Side::P, v},
                                                    VertexRef{Side::S, x4}};
                }
            }
    return std::nullopt;
}

BipartiteGraph induced_subgraph(const BipartiteGraph& g, const std::vector<int>& s_keep,
                                const std::vector<int>& p_keep) {
    auto check_sorted = [](const std::vector<int>& v, int bound) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0 || v[i] >= bound)
                throw std::invalid_argument("induced subgraph: index out of range");
            if (i > 0 && v[i] <= v[i - 1])
                throw std::invalid_argument("induced subgraph: indices not strictly ascending");
        }
    };
    check_sorted(s_keep, g.ns());
    check_sorted(p_keep, g.np());
    BipartiteGraph sub(static_cast<int>(s_keep.size()), static_cast<int>(p_keep.size()));
    for (int ls = 0; ls < static_cast<int>(s_keep.size()); ++ls)
        for (int lp = 0; lp < static_cast<int>(p_keep.size()); ++lp)
            if (g.has_edge(s_keep[ls], p_keep[lp])) sub.add_edge(ls, lp);
    return sub;
}

}  // namespace overlap
