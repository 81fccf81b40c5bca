#pragma once

#include <optional>
#include <stdexcept>

#include "overlap/bipartite_graph.hpp"
#include "overlap/graph_ops.hpp"
#include "overlap/labeling.hpp"

namespace overlap {

struct Matching;

/// Explicit resource limits for the exhaustive oracles.  Exceeding one
/// raises BudgetExceeded; nothing is truncated silently.
struct OracleBudget {
    int max_vertices = 16;
    int max_edges = 24;
    int max_levels = 8;
    int max_label_length = 4;
    int max_alphabet = 12;
    long long max_steps = 50'000'000;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// First matching satisfying the feasibility conditions, in deterministic
/// subset order (the empty matching is tried first), or nullopt when none
/// exists.
std::optional<Matching> feasible_matching_bruteforce(const BipartiteGraph& g,
                                                     const OracleBudget& budget);

/// Exhaustive search for a verifying labeling with labels of length at
/// most max_len over at most alphabet_size symbols.  Candidates are
/// canonical: along a fixed vertex scan, symbols first appear in
/// increasing order.  Returns the first hit or nullopt.
std::optional<Labeling> bounded_labeling_search(const BipartiteGraph& g, int max_len,
                                                int alphabet_size,
                                                const OracleBudget& budget);

struct EnumerationOptions {
    bool connected_only = false;
    bool twin_free_only = false;
};

/// All labeled bipartite graphs on fixed sides, by edge-subset mask in
/// ascending order; bit b of the mask is the edge (b / np, b % np).
/// Hard cap ns * np <= 20.
template <class F>
void enumerate_bipartite_graphs(int ns, int np, EnumerationOptions options, F&& f) {
    if (ns < 0 || np < 0 || ns * np > 20)
        throw std::invalid_argument("enumeration capped at ns * np <= 20");
    long long total = 1LL << (ns * np);
    for (long long mask = 0; mask < total; ++mask) {
        BipartiteGraph g(ns, np);
        for (int b = 0; b < ns * np; ++b)
            if ((mask >> b) & 1) g.add_edge(b / np, b % np);
        if (options.connected_only && !is_connected(g)) continue;
        if (options.twin_free_only && !is_twin_free(g)) continue;
        f(g);
    }
}

}  // namespace overlap
