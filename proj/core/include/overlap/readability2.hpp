#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "overlap/bipartite_graph.hpp"
#include "overlap/graph_ops.hpp"
#include "overlap/labeling.hpp"
#include "overlap/patterns.hpp"
#include "overlap/twosat.hpp"

namespace overlap {

/// A set of pairwise vertex-disjoint edges, kept sorted by (s, p).
struct Matching {
    std::vector<std::pair<int, int>> edges;

    friend bool operator==(const Matching&, const Matching&) = default;
};

/// True iff every listed edge exists in g and no two share an endpoint.
bool is_matching(const BipartiteGraph& g, const Matching& m);

/// Feasibility of a matching in a twin-free graph:
///   1. g minus m is P4-free,
///   2. removing m from any induced C6 leaves three disjoint edges,
///   3. removing m from any induced domino leaves a C4 plus a disjoint
///      edge.
/// Throws std::invalid_argument when g has twins or m is not a matching.
bool is_feasible_matching(const BipartiteGraph& g, const Matching& m);

namespace detail {
/// The three feasibility conditions against precomputed C6 and domino
/// occurrences, for callers that test many matchings of one graph.
bool feasible_against_patterns(const BipartiteGraph& g, const Matching& m,
                               const std::vector<PatternOccurrence>& c6s,
                               const std::vector<PatternOccurrence>& dominoes);
}  // namespace detail

/// The edge set E' that the clause encoding constrains: edges with a
/// degree->=3 vertex among the endpoints and their neighbors, plus all
/// edges on induced C6s.  Requires a connected graph with maximum
/// degree >= 3 (throws otherwise).  On twin-free graphs E' covers every
/// pattern edge, which build_formula relies on.
std::vector<std::pair<int, int>> constrained_edge_set(const BipartiteGraph& g);

/// The clause encoding over E'-edge variables, together with the pattern
/// occurrences each clause came from.  Rules:
///   1: ~e or ~f for E' pairs sharing an endpoint,
///   2: e <-> f for the two opposite edge pairs of each induced C4,
///   3: e1 or e2, e1<->e3, e3<->e5, e2<->e4, e4<->e6 per induced C6,
///   4: e2 or e3 and e5 or e6 per induced domino,
///   5: e2 or e3 per induced fork.
struct ClauseBuild {
    TwoSatFormula formula;
    std::vector<std::pair<int, int>> variable_edges;  // var index -> edge
    std::vector<PatternOccurrence> c4s, c6s, dominoes, forks;
};

ClauseBuild build_formula(const BipartiteGraph& g,
                          const std::vector<std::pair<int, int>>& e_prime);

/// Turns a satisfying assignment into a feasible matching: the true
/// E'-edges, greedily extended by middle edges of induced P4s that avoid
/// the matching, scanned in lexicographic order until fixpoint.
Matching extract_matching(const BipartiteGraph& g, const ClauseBuild& build,
                          const std::vector<bool>& assignment);

/// Length-2 labeling induced by a feasible matching: vertices of biclique
/// component k of g minus m are labeled [k]; a matched pair u in A_i,
/// v in B_j is relabeled [j, i]; remaining length-1 labels are padded to
/// length 2 with fresh symbols, prepended on the s side and appended on
/// the p side.  Requires m to satisfy the three feasibility conditions
/// (checked directly, twins permitted); throws std::invalid_argument
/// otherwise.
Labeling labeling_from_matching(const BipartiteGraph& g, const Matching& m);

/// Per-component trace of the decision on the twin-free reduction.
struct ComponentAnalysis {
    std::vector<int> s_map, p_map;  // component-local -> reduced indices
    bool used_shortcut = false;     // max degree <= 2, matched directly
    bool satisfied = false;
    std::optional<ClauseBuild> clauses;            // present on the 2SAT route
    std::optional<std::vector<bool>> assignment;   // present iff satisfiable
    Matching matching;                             // component-local, iff satisfied
};

struct Decision2 {
    bool yes = false;
    TwinFreeReduction reduction;
    std::vector<ComponentAnalysis> components;
    std::optional<Matching> matching;  // feasible matching of the reduction
    std::optional<Labeling> labeling;  // verified labeling of the input, length <= 2
    std::optional<int> unsat_component;
};

/// Exact decision of readability <= 2 for an arbitrary bipartite graph:
/// reduce twins, split into components, settle each by the alternating
/// shortcut (max degree <= 2) or the clause encoding, then assemble and
/// verify a witness labeling on yes.
Decision2 decide_readability_le2(const BipartiteGraph& g);

}  // namespace overlap
