#include <doctest.h>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "overlap/bipartite_graph.hpp"
#include "overlap/chain.hpp"
#include "overlap/grids.hpp"
#include "overlap/hub.hpp"
#include "overlap/labeling.hpp"
#include "overlap/oracle.hpp"

using namespace overlap;

namespace {

HubAssignment assignment_of(const BipartiteGraph& g, const std::vector<int>& levels, int k) {
    HubAssignment h;
    h.levels = k;
    std::vector<std::pair<int, int>> edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i) h.level_of[edges[i]] = levels[i];
    return h;
}

template <class F>
void for_each_assignment(const BipartiteGraph& g, int k, F&& f) {
    int m = static_cast<int>(g.edge_count());
    std::vector<int> levels(m, 1);
    for (;;) {
        f(assignment_of(g, levels, k));
        int i = m - 1;
        while (i >= 0 && levels[i] == k) levels[i--] = 1;
        if (i < 0) break;
        ++levels[i];
    }
}

}  // namespace

TEST_SUITE("hub") {
    TEST_CASE("validity conditions") {
        BipartiteGraph k22 = BipartiteGraph::from_edges(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
        CHECK(is_hub_decomposition(k22, assignment_of(k22, {1, 1, 1, 1}, 1)));

        BipartiteGraph p4 = BipartiteGraph::from_edges(2, 2, {{0, 0}, {0, 1}, {1, 1}});
        CHECK_FALSE(is_hub_decomposition(p4, assignment_of(p4, {1, 1, 1}, 1)));
        CHECK(is_hub_decomposition(p4, assignment_of(p4, {1, 2, 1}, 2)));

        BipartiteGraph twins = BipartiteGraph::from_edges(
            2, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 2}});
        HubAssignment bad;
        bad.levels = 2;
        bad.level_of = {{{0, 0}, 2}, {{1, 0}, 2}, {{0, 1}, 1}, {{1, 2}, 1}};
        CHECK_FALSE(is_hub_decomposition(twins, bad));
        bad.level_of = {{{0, 0}, 2}, {{1, 0}, 2}, {{0, 1}, 1}, {{1, 2}, 2}};
        CHECK_FALSE(is_hub_decomposition(twins, bad));
    }

    TEST_CASE("validity guards") {
        BipartiteGraph p4 = BipartiteGraph::from_edges(2, 2, {{0, 0}, {0, 1}, {1, 1}});
        HubAssignment missing;
        missing.levels = 1;
        missing.level_of = {{{0, 0}, 1}, {{0, 1}, 1}};
        CHECK_THROWS_AS(is_hub_decomposition(p4, missing), std::invalid_argument);

        HubAssignment stray;
        stray.levels = 1;
        stray.level_of = {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}, {{1, 0}, 1}};
        CHECK_THROWS_AS(is_hub_decomposition(p4, stray), std::invalid_argument);

        HubAssignment out_of_range;
        out_of_range.levels = 1;
        out_of_range.level_of = {{{0, 0}, 1}, {{0, 1}, 2}, {{1, 1}, 1}};
        CHECK_THROWS_AS(is_hub_decomposition(p4, out_of_range), std::invalid_argument);
    }

    TEST_CASE("minimum decompositions of the small landmarks") {
        OracleBudget budget;
        BipartiteGraph k22 = BipartiteGraph::from_edges(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
        MinHubResult k22_min = min_hub_bruteforce(k22, budget);
        CHECK(k22_min.levels == 1);
        CHECK(is_hub_decomposition(k22, k22_min.witness));

        BipartiteGraph p4 = BipartiteGraph::from_edges(2, 2, {{0, 0}, {0, 1}, {1, 1}});
        CHECK(min_hub_bruteforce(p4, budget).levels == 2);

        BipartiteGraph c6 = BipartiteGraph::from_edges(
            3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}});
        CHECK(min_hub_bruteforce(c6, budget).levels == 2);

        CHECK(min_hub_bruteforce(chain_graph(3), budget).levels == 2);
        CHECK(min_hub_bruteforce(BipartiteGraph(3, 2), budget).levels == 0);
        CHECK(min_hub_bruteforce(BipartiteGraph::from_edges(1, 1, {{0, 0}}), budget).levels == 1);
    }

    TEST_CASE("first witness is reproducible") {
        OracleBudget budget;
        BipartiteGraph g = chain_graph(3);
        MinHubResult a = min_hub_bruteforce(g, budget);
        MinHubResult b = min_hub_bruteforce(g, budget);
        CHECK(a.levels == b.levels);
        CHECK(a.witness.level_of == b.witness.level_of);
    }

    TEST_CASE("budget exhaustion raises") {
        OracleBudget tight;
        tight.max_levels = 1;
        BipartiteGraph p4 = BipartiteGraph::from_edges(2, 2, {{0, 0}, {0, 1}, {1, 1}});
        CHECK_THROWS_AS(min_hub_bruteforce(p4, tight), BudgetExceeded);

        OracleBudget tiny;
        tiny.max_vertices = 2;
        CHECK_THROWS_AS(min_hub_bruteforce(chain_graph(3), tiny), BudgetExceeded);
    }

    TEST_CASE("single edge levels always decompose") {
        OracleBudget budget;
        budget.max_levels = 8;
        for (auto edges : std::vector<std::vector<std::pair<int, int>>>{
                 {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 0}},
                 {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 1}},
             }) {
            BipartiteGraph g = BipartiteGraph::from_edges(3, 3, edges);
            MinHubResult r = min_hub_bruteforce(g, budget);
            CHECK(r.levels <= g.edge_count());
            CHECK(is_hub_decomposition(g, r.witness));
        }
    }

    TEST_CASE("overlap values of verified labelings") {
        for (int n = 2; n <= 10; ++n) {
            HubFromLabeling h = hub_from_labeling(chain_graph(n), chain_labeling(n));
            CHECK(h.valid);
            CHECK(h.assignment.levels <= chain_labeling(n).length());
        }

        BipartiteGraph k23 = BipartiteGraph::from_edges(
            2, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}});
        HubFromLabeling flat = hub_from_labeling(k23, biclique_labeling(k23));
        CHECK(flat.valid);
        CHECK(flat.assignment.levels == 1);

        HubFromLabeling torus = hub_from_labeling(toroidal_grid(4, 4).graph, torus_labeling(1));
        CHECK(torus.valid);
        CHECK(torus.assignment.levels <= 3);

        Labeling wrong = chain_labeling(3);
        BipartiteGraph pruned = chain_graph(3);
        pruned.remove_edge(0, 2);
        CHECK_THROWS_AS(hub_from_labeling(pruned, wrong), std::invalid_argument);
    }

    TEST_CASE("minimal chain decompositions obey the doubling degree bound") {
        for (int n : {2, 3}) {
            BipartiteGraph g = chain_graph(n);
            OracleBudget budget;
            int k = min_hub_bruteforce(g, budget).levels;
            int valid_count = 0;
            for_each_assignment(g, k, [&](const HubAssignment& h) {
                if (!is_hub_decomposition(g, h)) return;
                ++valid_count;
                CHECK(hub_level_degrees_bounded(g, h));
            });
            CHECK(valid_count > 0);
        }
    }

    TEST_CASE("degree bound guards") {
        BipartiteGraph k22 = BipartiteGraph::from_edges(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
        CHECK_THROWS_AS(hub_level_degrees_bounded(k22, assignment_of(k22, {1, 1, 1, 1}, 1)),
                        std::invalid_argument);

        BipartiteGraph c33 = chain_graph(3);
        std::vector<int> top(static_cast<size_t>(c33.edge_count()), 2);
        HubAssignment all_top = assignment_of(c33, top, 2);
        CHECK_FALSE(is_hub_decomposition(c33, all_top));
        CHECK_THROWS_AS(hub_level_degrees_bounded(c33, all_top), std::invalid_argument);
    }
}
