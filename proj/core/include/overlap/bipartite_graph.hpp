#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace overlap {

enum class Side : std::uint8_t { S, P };

/// A vertex of a bipartite graph, identified by its side and its
/// 0-based index within that side.
struct VertexRef {
    Side side;
    int index;

    friend constexpr auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

/// Bipartite graph on two dense 0-based vertex ranges V_s (size ns) and
/// V_p (size np).  Adjacency is kept as bit rows in both directions so
/// neighborhood algebra (twins, common neighbors, P4 tests) is cheap.
/// Immutable in spirit: operations elsewhere treat graphs as values.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(int ns, int np);

    /// Builds a graph from an edge list.  Throws std::invalid_argument on
    /// out-of-range endpoints or duplicate edges.
    static BipartiteGraph from_edges(int ns, int np,
                                     const std::vector<std::pair<int, int>>& edges);

    int ns() const { return ns_; }
    int np() const { return np_; }
    long long edge_count() const { return edge_count_; }
    bool is_edgeless() const { return edge_count_ == 0; }

    bool has_edge(int s, int p) const;
    void add_edge(int s, int p);
    void remove_edge(int s, int p);

    int s_degree(int s) const;
    int p_degree(int p) const;
    int degree(VertexRef v) const;
    int max_degree() const;

    std::vector<int> s_neighbors(int s) const;
    std::vector<int> p_neighbors(int p) const;

    /// Bit row over V_p for a given s-vertex (s_row_words() words).
    const std::uint64_t* s_row(int s) const;
    /// Bit row over V_s for a given p-vertex (p_row_words() words).
    const std::uint64_t* p_row(int p) const;
    int s_row_words() const { return pw_; }
    int p_row_words() const { return sw_; }

    /// Edges in ascending (s, p) order.  Materializes the full list; use
    /// for_each_edge for very dense graphs.
    std::vector<std::pair<int, int>> edges() const;

    template <class F>
    void for_each_edge(F&& f) const {
        for (int s = 0; s < ns_; ++s) {
            const std::uint64_t* row = s_row(s);
            for (int w = 0; w < pw_; ++w) {
                std::uint64_t bits = row[w];
                while (bits) {
                    int b = count_trailing(bits);
                    f(s, w * 64 + b);
                    bits &= bits - 1;
                }
            }
        }
    }

    /// The same graph with the two sides swapped.
    BipartiteGraph transposed() const;

    /// Copy of the graph with the given edges removed.  Throws if an edge
    /// is absent.
    BipartiteGraph minus(const std::vector<std::pair<int, int>>& removed) const;

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

private:
    static int count_trailing(std::uint64_t v);
    void check_range(int s, int p) const;

    int ns_ = 0;
    int np_ = 0;
    int sw_ = 0;  // words per p-row (over V_s)
    int pw_ = 0;  // words per s-row (over V_p)
    long long edge_count_ = 0;
    std::vector<std::uint64_t> srows_;  // ns_ * pw_
    std::vector<std::uint64_t> prows_;  // np_ * sw_
};

}  // namespace overlap
