#pragma once

#include <array>
#include <optional>
#include <vector>

#include "overlap/bipartite_graph.hpp"

namespace overlap {

/// One connected component, re-indexed densely.  s_map/p_map translate
/// component-local indices back to the parent graph.
struct ComponentSplit {
    BipartiteGraph graph;
    std::vector<int> s_map;
    std::vector<int> p_map;
};

/// Components ordered by their smallest vertex (all of V_s before V_p);
/// within a component, vertex maps are ascending.  Isolated vertices form
/// their own components.
std::vector<ComponentSplit> connected_components(const BipartiteGraph& g);

bool is_connected(const BipartiteGraph& g);

/// Same-side vertices with identical neighborhoods, grouped into classes.
/// Classes are ordered by smallest member; members are ascending.
struct TwinClasses {
    std::vector<std::vector<int>> s_classes;
    std::vector<std::vector<int>> p_classes;
    std::vector<int> s_class_of;
    std::vector<int> p_class_of;
};

TwinClasses twin_classes(const BipartiteGraph& g);

bool is_twin_free(const BipartiteGraph& g);

/// Quotient by twin classes: reduced vertex i is class i, and two classes
/// are adjacent iff their members are.  The reduced graph is twin-free.
struct TwinFreeReduction {
    BipartiteGraph graph;
    TwinClasses classes;
};

TwinFreeReduction twin_free_reduction(const BipartiteGraph& g);

/// True iff the graph has no induced path on four vertices; equivalently,
/// iff every component is a biclique.
bool is_p4_free(const BipartiteGraph& g);

/// Independent route to the same predicate, via component biclique tests.
bool is_biclique_union(const BipartiteGraph& g);

/// Some induced path x1-x2-x3-x4, or nullopt if none exists.
std::optional<std::array<VertexRef, 4>> find_induced_p4(const BipartiteGraph& g);

/// Subgraph induced by the given vertex subsets (each sorted ascending,
/// no duplicates).  Kept indices are renumbered by rank.
BipartiteGraph induced_subgraph(const BipartiteGraph& g, const std::vector<int>& s_keep,
                                const std::vector<int>& p_keep);

}  // namespace overlap
