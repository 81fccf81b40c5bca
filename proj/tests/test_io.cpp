#include <doctest.h>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "overlap/bipartite_graph.hpp"
#include "overlap/chain.hpp"
#include "overlap/grids.hpp"
#include "overlap/hub.hpp"
#include "overlap/io.hpp"
#include "overlap/labeling.hpp"
#include "overlap/readability2.hpp"
#include "overlap/twosat.hpp"

using namespace overlap;

namespace {

template <class T, class Writer, class Reader>
T round_trip(const T& value, Writer&& write, Reader&& read) {
    std::ostringstream out;
    write(out, value);
    std::istringstream in(out.str());
    return read(in);
}

int parse_error_line(const std::string& text, int expected_ns = -1, int expected_np = -1) {
    std::istringstream in(text);
    try {
        if (expected_ns < 0)
            read_graph(in);
        else
            read_labeling(in, expected_ns, expected_np);
    } catch (const ParseError& e) {
        return e.line;
    }
    return -1;
}

}  // namespace

TEST_SUITE("io") {
    TEST_CASE("graph round trip with comments") {
        BipartiteGraph g = chain_graph(4);
        BipartiteGraph back = round_trip(
            g, [](std::ostream& o, const BipartiteGraph& v) { write_graph(o, v); },
            [](std::istream& i) { return read_graph(i); });
        CHECK(back == g);

        std::istringstream commented(
            "# a graph\n\nbipartite 2 2  # sides\ne 0 0\n   e 1 1 # diagonal\n");
        BipartiteGraph parsed = read_graph(commented);
        CHECK(parsed == BipartiteGraph::from_edges(2, 2, {{0, 0}, {1, 1}}));
    }

    TEST_CASE("graph diagnostics carry line numbers") {
        CHECK(parse_error_line("") == 1);
        CHECK(parse_error_line("graph 2 2\n") == 1);
        CHECK(parse_error_line("bipartite 2\n") == 1);
        CHECK(parse_error_line("bipartite 2 2\ne 0\n") == 2);
        CHECK(parse_error_line("bipartite 2 2\ne 0 5\n") == 2);
        CHECK(parse_error_line("bipartite 2 2\ne 0 0\ne 0 0\n") == 3);
        CHECK(parse_error_line("bipartite 2 2\nxy 0 0\n") == 2);
        CHECK(parse_error_line("bipartite 2 2\ne zero 0\n") == 2);
        CHECK(parse_error_line("bipartite -1 2\n") == 1);

        std::istringstream in("bipartite 2 2\ne 0 5\n");
        try {
            read_graph(in);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line 2") == 0);
        }
    }

    TEST_CASE("labeling round trip") {
        Labeling l = chain_labeling(5);
        Labeling back = round_trip(
            l, [](std::ostream& o, const Labeling& v) { write_labeling(o, v); },
            [&](std::istream& i) { return read_labeling(i, 5, 5); });
        CHECK(back == l);

        std::istringstream empty_labels("labeling\ns 0\np 0 7\n");
        Labeling parsed = read_labeling(empty_labels, 1, 1);
        CHECK(parsed.s_labels == std::vector<Label>{{}});
        CHECK(parsed.p_labels == std::vector<Label>{{7}});
    }

    TEST_CASE("labeling diagnostics") {
        CHECK(parse_error_line("labeling\ns 0 1\n", 1, 1) == 2);
        CHECK(parse_error_line("labeling\ns 0 1\ns 0 2\np 0 1\n", 1, 1) == 3);
        CHECK(parse_error_line("labeling\ns 0 -3\np 0 1\n", 1, 1) == 2);
        CHECK(parse_error_line("labeling\ns 1 0\np 0 1\n", 1, 1) == 2);
        CHECK(parse_error_line("labels\n", 1, 1) == 1);
    }

    TEST_CASE("grid cells round trip and sort") {
        GridGraphSpec spec{{{0, 1}, {2, 0}, {1, 1}}};
        std::ostringstream out;
        write_grid_graph(out, spec);
        std::istringstream in(out.str());
        GridGraphSpec back = read_grid_graph(in);
        CHECK(back.cells ==
              std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {2, 0}});

        std::istringstream dup("gridgraph\nv 0 0\nv 0 0\n");
        CHECK_THROWS_AS(read_grid_graph(dup), ParseError);
        std::istringstream negative("gridgraph\nv 0 -1\n");
        CHECK_THROWS_AS(read_grid_graph(negative), ParseError);
    }

    TEST_CASE("hub assignment round trip") {
        BipartiteGraph g = chain_graph(3);
        OracleBudget budget;
        HubAssignment h = min_hub_bruteforce(g, budget).witness;
        std::ostringstream out;
        write_hub_assignment(out, h);
        std::istringstream in(out.str());
        HubAssignment back = read_hub_assignment(in, g);
        CHECK(back.levels == h.levels);
        CHECK(back.level_of == h.level_of);

        std::istringstream stray("w 0 0 1\nw 2 0 1\n");
        CHECK_THROWS_AS(read_hub_assignment(stray, g), ParseError);
        std::istringstream dup("w 0 0 1\nw 0 0 2\n");
        CHECK_THROWS_AS(read_hub_assignment(dup, g), ParseError);
        std::istringstream zero("w 0 0 0\n");
        CHECK_THROWS_AS(read_hub_assignment(zero, g), ParseError);
    }

    TEST_CASE("formula dump in conjunctive normal form") {
        TwoSatFormula f;
        f.num_vars = 2;
        f.clauses = {{{0, false}, {1, false}, 1, -1}, {{0, true}, {1, false}, 2, 0}};
        std::ostringstream out;
        write_cnf(out, f, {{0, 3}, {1, 2}});
        CHECK(out.str() ==
              "c var 1 = edge 0 3\n"
              "c var 2 = edge 1 2\n"
              "p cnf 2 2\n"
              "-1 -2 0\n"
              "1 -2 0\n");
    }
}
