#pragma once

#include <map>
#include <utility>

#include "overlap/bipartite_graph.hpp"
#include "overlap/labeling.hpp"
#include "overlap/oracle.hpp"

namespace overlap {

/// An assignment of every edge to a level 1..levels.  levels == 0 is the
/// empty assignment of an edgeless graph.
struct HubAssignment {
    int levels = 0;
    std::map<std::pair<int, int>, int> level_of;

    friend bool operator==(const HubAssignment&, const HubAssignment&) = default;
};

/// Validity of a hierarchical-union-of-bicliques decomposition:
///   (i)  every level graph is a disjoint union of bicliques,
///   (ii) non-isolated twins of a level graph G_i (i >= 2) are twins
///        (possibly isolated) in every lower level graph.
/// Throws std::invalid_argument when the assignment domain is not exactly
/// the edge set or a level is out of range.
bool is_hub_decomposition(const BipartiteGraph& g, const HubAssignment& h);

/// Smallest number of levels admitting a valid decomposition, found by
/// plain enumeration over level assignments in ascending lexicographic
/// order; the witness is the first valid assignment.  Throws
/// BudgetExceeded when the graph or the enumeration outgrows the budget.
struct MinHubResult {
    int levels = 0;
    HubAssignment witness;
};

MinHubResult min_hub_bruteforce(const BipartiteGraph& g, const OracleBudget& budget);

/// The level assignment induced by a verifying labeling: each edge goes
/// to its overlap value.  Validity of the result is reported, not
/// assumed.  Throws std::invalid_argument when the labeling does not
/// verify against the graph.
struct HubFromLabeling {
    HubAssignment assignment;
    bool valid = false;
};

HubFromLabeling hub_from_labeling(const BipartiteGraph& g, const Labeling& l);

/// Degree growth property of valid decompositions of chain graphs: the
/// level graph i levels below the top has maximum degree at most 2^i.
/// Throws std::invalid_argument unless g is a chain graph and h is valid.
bool hub_level_degrees_bounded(const BipartiteGraph& g, const HubAssignment& h);

}  // namespace overlap
