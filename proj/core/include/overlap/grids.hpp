#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "overlap/bipartite_graph.hpp"
#include "overlap/labeling.hpp"

namespace overlap {

/// A finite set of lattice cells inducing a grid graph.  Cells are sorted
/// ascending, unique, with non-negative coordinates.
struct GridGraphSpec {
    std::vector<std::pair<int, int>> cells;
};

/// A bipartite encoding of a lattice-cell graph: cells of even coordinate
/// parity form V_s, odd parity V_p, each side ordered by (row, col).
struct CellEncoding {
    BipartiteGraph graph;
    std::vector<std::pair<int, int>> s_cells;
    std::vector<std::pair<int, int>> p_cells;
    std::map<std::pair<int, int>, VertexRef> vertex_of;
};

/// The full m-by-n grid graph.
CellEncoding grid(int m, int n);

/// The m-by-n toroidal grid (rows and columns wrap).  Requires m, n even
/// and at least 4 so the result is a simple bipartite graph.
CellEncoding toroidal_grid(int m, int n);

/// The grid graph induced by an arbitrary cell set.
CellEncoding grid_graph(const GridGraphSpec& spec);

/// The square decomposition of the 4n-by-4n toroidal grid: anchored
/// 2-by-2 squares partition the vertices, and the horizontal/vertical
/// edges not inside squares form the perfect matchings M1/M2.
struct TorusDecomposition {
    int n = 0;                                    // torus side is 4n
    std::vector<std::pair<int, int>> anchors;     // sorted; square k is anchors[k]
    std::vector<std::vector<int>> square_id;      // [row][col]
    std::vector<std::vector<std::pair<int, int>>> horizontal_partner;  // M1
    std::vector<std::vector<std::pair<int, int>>> vertical_partner;    // M2

    int square_of(std::pair<int, int> cell) const;

    /// Every cell lies in exactly one square.
    bool squares_partition_vertices() const;
    /// M1 and M2 are involutions without fixed points whose edges exist
    /// and avoid the in-square edges.
    bool matchings_are_perfect_and_outside_squares() const;
    /// Vertically matched cells have horizontal partners in a common
    /// square.
    bool vertical_pairs_share_horizontal_square() const;
    /// No two squares are joined by more than one M1 edge.
    bool squares_joined_by_at_most_one_horizontal_edge() const;
};

TorusDecomposition torus_decomposition(int n);

/// The length-3 labeling of the 4n-by-4n toroidal grid built from square
/// ids: each cell reads its own square, its M1 partner's and its M2
/// partner's, ordered by side.
Labeling torus_labeling(int n);

/// Closed-form readability of the full m-by-n grid graph.
int grid_readability(int m, int n);

/// Exact readability of an arbitrary grid graph with a verified witness
/// labeling of that length.
struct GridDecision {
    int value = 0;
    Labeling witness;
    CellEncoding encoding;
};

GridDecision grid_graph_readability(const GridGraphSpec& spec);

}  // namespace overlap
