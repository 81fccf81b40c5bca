#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "overlap/bipartite_graph.hpp"
#include "overlap/grids.hpp"
#include "overlap/hub.hpp"
#include "overlap/labeling.hpp"
#include "overlap/twosat.hpp"

namespace overlap {

/// Diagnostic for malformed input, carrying the 1-based source line.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
};

/// Graph format: header "bipartite <ns> <np>", then one "e <i> <j>" line
/// per edge.  '#' starts a comment; blank lines are ignored.  Duplicate
/// and out-of-range edges are rejected with their line number.
BipartiteGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const BipartiteGraph& g);

/// Labeling format: header "labeling", then one "s <i> <symbols...>" or
/// "p <j> <symbols...>" line per vertex (exactly once each; an empty
/// label has no symbols).
Labeling read_labeling(std::istream& in, int ns, int np);
void write_labeling(std::ostream& out, const Labeling& l);

/// Grid graph format: header "gridgraph", then one "v <row> <col>" line
/// per cell, coordinates non-negative, duplicates rejected.
GridGraphSpec read_grid_graph(std::istream& in);
void write_grid_graph(std::ostream& out, const GridGraphSpec& spec);

/// Hub assignment format: one "w <i> <j> <level>" line per edge; levels
/// start at 1, the level count is the maximum used.
HubAssignment read_hub_assignment(std::istream& in, const BipartiteGraph& g);
void write_hub_assignment(std::ostream& out, const HubAssignment& h);

/// DIMACS-style dump: comment lines mapping each variable to its edge, a
/// "p cnf <vars> <clauses>" header, then zero-terminated clauses.
void write_cnf(std::ostream& out, const TwoSatFormula& formula,
               const std::vector<std::pair<int, int>>& variable_edges);

}  // namespace overlap
