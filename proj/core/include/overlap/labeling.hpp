#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "overlap/bipartite_graph.hpp"
#include "overlap/graph_ops.hpp"

namespace overlap {

using Symbol = int;
using Label = std::vector<Symbol>;

/// An overlap labeling candidate: one label (possibly empty) per vertex.
struct Labeling {
    std::vector<Label> s_labels;
    std::vector<Label> p_labels;

    /// Maximum label length; 0 when every label is empty.
    int length() const;
    /// Distinct symbols used, ascending.
    std::vector<Symbol> alphabet() const;

    friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// True iff some suffix of x of length i equals the prefix of y of the
/// same length, for 1 <= i <= min(|x|, |y|).
bool overlaps(const Label& x, const Label& y);

/// Smallest such i, or nullopt when the labels do not overlap.
std::optional<int> overlap_value(const Label& x, const Label& y);

/// Outcome of checking a labeling against a graph: every vertex pair is
/// decided, mismatches are listed ascending by (s, p).
struct VerificationReport {
    bool ok = false;
    std::vector<std::pair<int, int>> missing;  // edges whose labels do not overlap
    std::vector<std::pair<int, int>> extra;    // non-edges whose labels overlap
};

/// Ground-truth check of a labeling: decides overlap for all ns*np pairs.
/// Throws std::invalid_argument when label counts do not match the graph.
VerificationReport verify(const BipartiteGraph& g, const Labeling& l);

namespace detail {
/// Pairwise and trie-accelerated implementations of verify; both decide
/// every pair exactly.  verify() picks by instance size; tests equate them.
VerificationReport verify_pairwise(const BipartiteGraph& g, const Labeling& l);
VerificationReport verify_batched(const BipartiteGraph& g, const Labeling& l);
}  // namespace detail

/// Labeling restricted to sorted vertex subsets, for use with the matching
/// induced subgraph.
Labeling restrict_labeling(const Labeling& l, const std::vector<int>& s_keep,
                           const std::vector<int>& p_keep);

/// Side-by-side union: b's symbols are shifted past a's maximum so the two
/// alphabets stay disjoint.
Labeling union_disjoint(const Labeling& a, const Labeling& b);

/// Labeling for the transposed graph: sides swap and every label is
/// reversed.
Labeling reverse_labeling(const Labeling& l);

/// Extends a labeling of the twin-free reduction to the original graph by
/// copying each class label to all members.
Labeling lift_to_twins(const TwinFreeReduction& reduction, const Labeling& reduced);

/// Canonical labeling of a P4-free graph: every vertex of biclique
/// component k is labeled [k]; isolated vertices get fresh singleton
/// symbols; an edgeless graph gets all-empty labels.  Throws
/// std::invalid_argument when the graph is not P4-free.
Labeling biclique_labeling(const BipartiteGraph& g);

}  // namespace overlap
