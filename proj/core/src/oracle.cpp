#include "overlap/oracle.hpp"

#include <algorithm>

#include "overlap/patterns.hpp"
#include "overlap/readability2.hpp"

namespace overlap {

namespace {

struct MatchingSearch {
    const BipartiteGraph& g;
    const OracleBudget& budget;
    std::vector<std::pair<int, int>> edges;
    std::vector<PatternOccurrence> c6s, dominoes;
    std::vector<char> s_used, p_used;
    std::vector<std::pair<int, int>> chosen;
    long long steps = 0;

    std::optional<Matching> search(std::size_t index) {
        if (++steps > budget.max_steps)
            throw BudgetExceeded("matching search: step budget exceeded");
        if (index == edges.size()) {
            Matching m;
            m.edges = chosen;
            std::sort(m.edges.begin(), m.edges.end());
            if (detail::feasible_against_patterns(g, m, c6s, dominoes)) return m;
            return std::nullopt;
        }
        if (auto found = search(index + 1)) return found;
        auto [s, p] = edges[index];
        if (!s_used[s] && !p_used[p]) {
            s_used[s] = p_used[p] = 1;
            chosen.push_back(edges[index]);
            auto found = search(index + 1);
            chosen.pop_back();
            s_used[s] = p_used[p] = 0;
            if (found) return found;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<Matching> feasible_matching_bruteforce(const BipartiteGraph& g,
                                                     const OracleBudget& budget) {
    if (g.ns() + g.np() > budget.max_vertices)
        throw BudgetExceeded("matching search: vertex budget exceeded");
    if (g.edge_count() > budget.max_edges)
        throw BudgetExceeded("matching search: edge budget exceeded");

    MatchingSearch search{g,
                          budget,
                          g.edges(),
                          enumerate_patterns(g, PatternKind::C6),
                          enumerate_patterns(g, PatternKind::Domino),
                          {},
                          {},
                          {},
                          0};
    search.s_used.assign(g.ns(), 0);
    search.p_used.assign(g.np(), 0);
    return search.search(0);
}

namespace {

struct LabelSearch {
    const BipartiteGraph& g;
    int max_len;
    int alphabet_size;
    const OracleBudget& budget;
    // Alternating s/p vertex scan so cross-side constraints bind early.
    std::vector<VertexRef> order;
    std::vector<Label> s_labels, p_labels;
    std::vector<char> s_set, p_set;
    long long steps = 0;

    bool consistent(VertexRef just_set) {
        const bool s_side = just_set.side == Side::S;
        const Label& mine = s_side ? s_labels[just_set.index] : p_labels[just_set.index];
        int other_count = s_side ? g.np() : g.ns();
        for (int o = 0; o < other_count; ++o) {
            if (s_side ? !p_set[o] : !s_set[o]) continue;
            const Label& theirs = s_side ? p_labels[o] : s_labels[o];
            bool edge = s_side ? g.has_edge(just_set.index, o) : g.has_edge(o, just_set.index);
            bool ov = s_side ? overlaps(mine, theirs) : overlaps(theirs, mine);
            if (edge != ov) return false;
        }
        return true;
    }

    bool assign(std::size_t pos, int symbols_used) {
        if (pos == order.size()) return true;
        VertexRef v = order[pos];
        Label candidate;
        return try_lengths(pos, v, candidate, symbols_used);
    }

    bool try_lengths(std::size_t pos, VertexRef v, Label& candidate, int symbols_used) {
        if (++steps > budget.max_steps)
            throw BudgetExceeded("labeling search: step budget exceeded");
        if (static_cast<int>(candidate.size()) <= max_len) {
            if (place(pos, v, candidate, symbols_used)) return true;
        }
        if (static_cast<int>(candidate.size()) == max_len) return false;
        int limit = std::min(symbols_used, alphabet_size - 1);
        for (Symbol sym = 0; sym <= limit; ++sym) {
            candidate.push_back(sym);
            int next_used = std::max(symbols_used, sym + 1);
            if (try_lengths(pos, v, candidate, next_used)) return true;
            candidate.pop_back();
        }
        return false;
    }

    bool place(std::size_t pos, VertexRef v, const Label& candidate, int symbols_used) {
        if (v.side == Side::S) {
            s_labels[v.index] = candidate;
            s_set[v.index] = 1;
        } else {
            p_labels[v.index] = candidate;
            p_set[v.index] = 1;
        }
        bool ok = consistent(v) && assign(pos + 1, symbols_used);
        if (!ok) {
            if (v.side == Side::S)
                s_set[v.index] = 0;
            else
                p_set[v.index] = 0;
        }
        return ok;
    }
};

}  // namespace

std::optional<Labeling> bounded_labeling_search(const BipartiteGraph& g, int max_len,
                                                int alphabet_size,
                                                const OracleBudget& budget) {
    if (max_len < 0 || alphabet_size < 1)
        throw std::invalid_argument("labeling search: bad bounds");
    if (g.ns() + g.np() > budget.max_vertices)
        throw BudgetExceeded("labeling search: vertex budget exceeded");
    if (max_len > budget.max_label_length)
        throw BudgetExceeded("labeling search: label length budget exceeded");
    if (alphabet_size > budget.max_alphabet)
        throw BudgetExceeded("labeling search: alphabet budget exceeded");

    LabelSearch search{g, max_len, alphabet_size, budget, {}, {}, {}, {}, {}, 0};
    for (int i = 0; i < std::max(g.ns(), g.np()); ++i) {
        if (i < g.ns()) search.order.push_back({Side::S, i});
        if (i < g.np()) search.order.push_back({Side::P, i});
    }
    search.s_labels.resize(g.ns());
    search.p_labels.resize(g.np());
    search.s_set.assign(g.ns(), 0);
    search.p_set.assign(g.np(), 0);

    if (!search.assign(0, 0)) return std::nullopt;
    return Labeling{std::move(search.s_labels), std::move(search.p_labels)};
}

}  // namespace overlap
