#include "overlap/hub.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "overlap/chain.hpp"
#include "overlap/graph_ops.hpp"

namespace overlap {

namespace {

std::vector<BipartiteGraph> level_graphs(const BipartiteGraph& g, const HubAssignment& h) {
    std::vector<BipartiteGraph> levels(static_cast<std::size_t>(h.levels) + 1,
                                       BipartiteGraph(g.ns(), g.np()));
    for (const auto& [edge, level] : h.level_of) levels[level].add_edge(edge.first, edge.second);
    return levels;
}

bool rows_equal(const std::uint64_t* a, const std::uint64_t* b, int words) {
    return std::memcmp(a, b, static_cast<std::size_t>(words) * sizeof(std::uint64_t)) == 0;
}

bool row_empty(const std::uint64_t* a, int words) {
    for (int w = 0; w < words; ++w)
        if (a[w]) return false;
    return true;
}

}  // namespace

bool is_hub_decomposition(const BipartiteGraph& g, const HubAssignment& h) {
    if (static_cast<long long>(h.level_of.size()) != g.edge_count())
        throw std::invalid_argument("assignment does not cover the edge set");
    for (const auto& [edge, level] : h.level_of) {
        if (!g.has_edge(edge.first, edge.second))
            throw std::invalid_argument("assignment contains a non-edge");
        if (level < 1 || level > h.levels)
            throw std::invalid_argument("level out of range: " + std::to_string(level));
    }

    std::vector<BipartiteGraph> levels = level_graphs(g, h);
    for (int i = 1; i <= h.levels; ++i)
        if (!is_p4_free(levels[i])) return false;

    // Non-isolated twins of a level must stay twins on all lower levels.
    auto lower_twins_ok = [&](int i, bool s_side) {
        int count = s_side ? g.ns() : g.np();
        int words = s_side ? levels[i].s_row_words() : levels[i].p_row_words();
        auto row = [&](int lvl, int v) {
            return s_side ? levels[lvl].s_row(v) : levels[lvl].p_row(v);
        };
        for (int a = 0; a < count; ++a) {
            if (row_empty(row(i, a), words)) continue;
            for (int b = a + 1; b < count; ++b) {
                if (row_empty(row(i, b), words)) continue;
                if (!rows_equal(row(i, a), row(i, b), words)) continue;
                for (int j = 1; j < i; ++j)
                    if (!rows_equal(row(j, a), row(j, b), words)) return false;
            }
        }
        return true;
    };
    for (int i = 2; i <= h.levels; ++i)
        if (!lower_twins_ok(i, true) || !lower_twins_ok(i, false)) return false;
    return true;
}

MinHubResult min_hub_bruteforce(const BipartiteGraph& g, const OracleBudget& budget) {
    if (g.ns() + g.np() > budget.max_vertices)
        throw BudgetExceeded("min hub: vertex budget exceeded");
    if (g.edge_count() > budget.max_edges)
        throw BudgetExceeded("min hub: edge budget exceeded");

    std::vector<std::pair<int, int>> edges = g.edges();
    int m = static_cast<int>(edges.size());
    if (m == 0) return {0, HubAssignment{}};

    long long steps = 0;
    int top = std::min(m, budget.max_levels);
    for (int k = 1; k <= top; ++k) {
        std::vector<int> assign(m, 1);
        for (;;) {
            if (++steps > budget.max_steps)
                throw BudgetExceeded("min hub: step budget exceeded");
            HubAssignment h;
            h.levels = k;
            for (int e = 0; e < m; ++e) h.level_of[edges[e]] = assign[e];
            if (is_hub_decomposition(g, h)) return {k, h};
            int pos = m - 1;
            while (pos >= 0 && assign[pos] == k) assign[pos--] = 1;
            if (pos < 0) break;
            ++assign[pos];
        }
    }
    throw BudgetExceeded("min hub: level budget exceeded");
}

HubFromLabeling hub_from_labeling(const BipartiteGraph& g, const Labeling& l) {
    VerificationReport report = verify(g, l);
    if (!report.ok) throw std::invalid_argument("labeling does not verify against the graph");

    HubFromLabeling out;
    g.for_each_edge([&](int s, int p) {
        int value = *overlap_value(l.s_labels[s], l.p_labels[p]);
        out.assignment.level_of[{s, p}] = value;
        out.assignment.levels = std::max(out.assignment.levels, value);
    });
    out.valid = is_hub_decomposition(g, out.assignment);
    return out;
}

bool hub_level_degrees_bounded(const BipartiteGraph& g, const HubAssignment& h) {
    if (g.ns() != g.np() || g.ns() < 1 || g != chain_graph(g.ns()))
        throw std::invalid_argument("degree property applies to chain graphs only");
    if (!is_hub_decomposition(g, h))
        throw std::invalid_argument("degree property applies to valid decompositions only");

    std::vector<BipartiteGraph> levels = level_graphs(g, h);
    long long bound = 1;
    for (int level = h.levels; level >= 1; --level) {
        if (levels[level].max_degree() > bound) return false;
        if (bound <= g.ns()) bound *= 2;
    }
    return true;
}

}  // namespace overlap
