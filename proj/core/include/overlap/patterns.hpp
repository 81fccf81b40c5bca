#pragma once

#include <utility>
#include <vector>

#include "overlap/bipartite_graph.hpp"

namespace overlap {

enum class PatternKind { C4, C6, Domino, Fork };

/// One induced occurrence of a pattern.  vertices lists x_1..x_k in the
/// pattern's canonical labeling; edges lists e_1..e_k as (s, p) pairs in
/// the matching canonical edge order:
///   C4:     cycle x1-x2-x3-x4, e_i joins x_i and x_{i+1} (cyclic).
///   C6:     cycle x1-...-x6, e_i joins x_i and x_{i+1} (cyclic).
///   Domino: C6 as above plus the chord e_7 = (x_3, x_6); x_3 and x_6 are
///           the two degree-3 vertices.
///   Fork:   center x_2 adjacent to x_1, x_3, x_5; tail x_4 adjacent only
///           to x_3; e_1=(x_1,x_2), e_2=(x_2,x_3), e_3=(x_3,x_4),
///           e_4=(x_2,x_5).
struct PatternOccurrence {
    PatternKind kind;
    std::vector<VertexRef> vertices;
    std::vector<std::pair<int, int>> edges;
};

/// All induced occurrences of the pattern, one per vertex set (per
/// center/tail decomposition for forks), sorted by their sorted vertex
/// lists.  Exact and deterministic; intended for graphs up to a few
/// hundred vertices.
std::vector<PatternOccurrence> enumerate_patterns(const BipartiteGraph& g, PatternKind kind);

}  // namespace overlap
