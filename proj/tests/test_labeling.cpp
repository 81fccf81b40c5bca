#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "overlap/bipartite_graph.hpp"
#include "overlap/chain.hpp"
#include "overlap/graph_ops.hpp"
#include "overlap/grids.hpp"
#include "overlap/labeling.hpp"
#include "test_support.hpp"

using namespace overlap;

namespace {

Labeling random_labeling(std::mt19937& gen, int ns, int np, int max_len, int alphabet) {
    Labeling l;
    auto fill = [&](std::vector<Label>& side, int n) {
        side.resize(n);
        for (Label& label : side) {
            int len = testsupport::draw(gen, max_len + 1);
            label.resize(len);
            for (Symbol& s : label) s = testsupport::draw(gen, alphabet);
        }
    };
    fill(l.s_labels, ns);
    fill(l.p_labels, np);
    return l;
}

}  // namespace

TEST_SUITE("labeling") {
    TEST_CASE("overlap semantics") {
        CHECK(overlaps({2, 0}, {0}));
        CHECK_FALSE(overlaps({0}, {2, 0}));
        CHECK(overlaps({0}, {0, 1}));
        CHECK(overlaps({0, 1}, {1, 0}));
        CHECK_FALSE(overlaps({}, {0}));
        CHECK_FALSE(overlaps({0}, {}));
        CHECK(overlap_value({1, 2}, {1, 2}) == 2);
        CHECK(overlap_value({2, 0}, {0}) == 1);
        CHECK(overlap_value({0, 1}, {1, 1}) == 1);
        CHECK_FALSE(overlap_value({0, 1}, {0, 0}).has_value());
    }

    TEST_CASE("length and alphabet") {
        Labeling l;
        l.s_labels = {{2, 0}, {}};
        l.p_labels = {{0}};
        CHECK(l.length() == 2);
        CHECK(l.alphabet() == std::vector<Symbol>{0, 2});
        CHECK(Labeling{}.length() == 0);
    }

    TEST_CASE("verify reports mismatches ascending") {
        BipartiteGraph p4 = BipartiteGraph::from_edges(2, 2, {{0, 0}, {0, 1}, {1, 1}});
        Labeling all_zero;
        all_zero.s_labels = {{0}, {0}};
        all_zero.p_labels = {{0}, {0}};
        VerificationReport report = verify(p4, all_zero);
        CHECK_FALSE(report.ok);
        CHECK(report.missing.empty());
        CHECK(report.extra == std::vector<std::pair<int, int>>{{1, 0}});

        Labeling short_side;
        short_side.s_labels = {{0}};
        short_side.p_labels = {{0}, {0}};
        CHECK_THROWS_AS(verify(p4, short_side), std::invalid_argument);
    }

    TEST_CASE("pairwise and batched verification agree") {
        std::mt19937 gen(41);
        for (int trial = 0; trial < 250; ++trial) {
            int ns = 1 + testsupport::draw(gen, 8);
            int np = 1 + testsupport::draw(gen, 8);
            BipartiteGraph g = testsupport::random_graph(gen, ns, np, testsupport::draw(gen, 100));
            Labeling l = random_labeling(gen, ns, np, 3, 3);
            VerificationReport a = detail::verify_pairwise(g, l);
            VerificationReport b = detail::verify_batched(g, l);
            CHECK(a.ok == b.ok);
            CHECK(a.missing == b.missing);
            CHECK(a.extra == b.extra);
        }
    }

    TEST_CASE("batched path handles real witnesses") {
        Labeling chain = chain_labeling(60);
        BipartiteGraph g = chain_graph(60);
        CHECK(detail::verify_batched(g, chain).ok);
        CHECK(detail::verify_pairwise(g, chain).ok);

        Labeling torus = torus_labeling(1);
        BipartiteGraph t = toroidal_grid(4, 4).graph;
        CHECK(detail::verify_batched(t, torus).ok);
    }

    TEST_CASE("restriction and disjoint union") {
        Labeling l;
        l.s_labels = {{0}, {1}, {2}};
        l.p_labels = {{3}, {4}};
        Labeling r = restrict_labeling(l, {0, 2}, {1});
        CHECK(r.s_labels == std::vector<Label>{{0}, {2}});
        CHECK(r.p_labels == std::vector<Label>{{4}});
        CHECK_THROWS_AS(restrict_labeling(l, {2, 0}, {}), std::invalid_argument);

        Labeling a;
        a.s_labels = {{0}};
        a.p_labels = {{0}};
        Labeling b;
        b.s_labels = {{0, 1}};
        b.p_labels = {{1}};
        Labeling u = union_disjoint(a, b);
        CHECK(u.s_labels == std::vector<Label>{{0}, {1, 2}});
        CHECK(u.p_labels == std::vector<Label>{{0}, {2}});
    }

    TEST_CASE("reversal labels the transposed graph") {
        BipartiteGraph g = chain_graph(5);
        Labeling l = chain_labeling(5);
        Labeling rev = reverse_labeling(l);
        CHECK(verify(g, l).ok);
        CHECK(verify(g.transposed(), rev).ok);
        CHECK(rev.s_labels.size() == l.p_labels.size());
        Label first = l.s_labels[0];
        std::reverse(first.begin(), first.end());
        CHECK(rev.p_labels[0] == first);
    }

    TEST_CASE("twin lifting preserves verification") {
        std::mt19937 gen(43);
        for (int trial = 0; trial < 60; ++trial) {
            BipartiteGraph g = testsupport::random_graph(gen, 1 + testsupport::draw(gen, 5),
                                                         1 + testsupport::draw(gen, 5),
                                                         30 + testsupport::draw(gen, 40));
            TwinFreeReduction red = twin_free_reduction(g);
            if (!is_p4_free(red.graph)) continue;
            Labeling reduced = biclique_labeling(red.graph);
            Labeling lifted = lift_to_twins(red, reduced);
            CHECK(verify(g, lifted).ok);
        }
    }

    TEST_CASE("biclique labeling") {
        BipartiteGraph k23 = BipartiteGraph::from_edges(
            2, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}});
        Labeling l = biclique_labeling(k23);
        CHECK(l.length() == 1);
        CHECK(l.s_labels == std::vector<Label>{{0}, {0}});
        CHECK(verify(k23, l).ok);

        BipartiteGraph two = BipartiteGraph::from_edges(2, 2, {{0, 0}, {1, 1}});
        Labeling pair = biclique_labeling(two);
        CHECK(pair.s_labels == std::vector<Label>{{0}, {1}});
        CHECK(verify(two, pair).ok);

        BipartiteGraph edgeless(2, 1);
        Labeling empty = biclique_labeling(edgeless);
        CHECK(empty.length() == 0);
        CHECK(verify(edgeless, empty).ok);

        BipartiteGraph with_isolated = BipartiteGraph::from_edges(2, 2, {{0, 0}});
        Labeling iso = biclique_labeling(with_isolated);
        CHECK(iso.length() == 1);
        CHECK(verify(with_isolated, iso).ok);

        BipartiteGraph p4 = BipartiteGraph::from_edges(2, 2, {{0, 0}, {0, 1}, {1, 1}});
        CHECK_THROWS_AS(biclique_labeling(p4), std::invalid_argument);
    }
}
