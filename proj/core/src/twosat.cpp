#include "overlap/twosat.hpp"

#include <algorithm>
#include <stdexcept>

namespace overlap {

namespace {

// Literal nodes: variable v maps to node 2v (negated) and 2v+1 (plain).
int node_of(TwoSatLiteral l) { return 2 * l.var + (l.positive ? 1 : 0); }
int negated(int node) { return node ^ 1; }

}  // namespace

std::optional<std::vector<bool>> solve_2sat(const TwoSatFormula& f) {
    int n = 2 * f.num_vars;
    std::vector<std::vector<int>> adj(n);
    for (const TwoSatClause& c : f.clauses) {
        if (c.a.var < 0 || c.a.var >= f.num_vars || c.b.var < 0 || c.b.var >= f.num_vars)
            throw std::invalid_argument("2sat literal out of range");
        adj[negated(node_of(c.a))].push_back(node_of(c.b));
        adj[negated(node_of(c.b))].push_back(node_of(c.a));
    }

    // Iterative Tarjan over nodes in ascending order.  Components are
    // numbered in pop order, so an edge u -> v implies comp[v] <= comp[u].
    std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stack, frame_node, frame_edge;
    std::vector<bool> on_stack(n, false);
    int counter = 0, comps = 0;
    for (int root = 0; root < n; ++root) {
        if (num[root] >= 0) continue;
        frame_node.push_back(root);
        frame_edge.push_back(0);
        num[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frame_node.empty()) {
            int u = frame_node.back();
            int& ei = frame_edge.back();
            if (ei < static_cast<int>(adj[u].size())) {
                int v = adj[u][ei++];
                if (num[v] < 0) {
                    num[v] = low[v] = counter++;
                    stack.push_back(v);
                    on_stack[v] = true;
                    frame_node.push_back(v);
                    frame_edge.push_back(0);
                } else if (on_stack[v]) {
                    low[u] = std::min(low[u], num[v]);
                }
            } else {
                if (low[u] == num[u]) {
                    for (;;) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = comps;
                        if (w == u) break;
                    }
                    ++comps;
                }
                frame_node.pop_back();
                frame_edge.pop_back();
                if (!frame_node.empty()) {
                    int parent = frame_node.back();
                    low[parent] = std::min(low[parent], low[u]);
                }
            }
        }
    }

    std::vector<bool> assignment(f.num_vars);
    for (int v = 0; v < f.num_vars; ++v) {
        if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;
        // Smaller component id sits on the sink side of the condensation;
        // taking the sink-side literal satisfies all implications.
        assignment[v] = comp[2 * v + 1] < comp[2 * v];
    }
    return assignment;
}

}  // namespace overlap
