#include "overlap/labeling.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace overlap {

int Labeling::length() const {
    std::size_t best = 0;
    for (const Label& l : s_labels) best = std::max(best, l.size());
    for (const Label& l : p_labels) best = std::max(best, l.size());
    return static_cast<int>(best);
}

std::vector<Symbol> Labeling::alphabet() const {
    std::vector<Symbol> out;
    for (const Label& l : s_labels) out.insert(out.end(), l.begin(), l.end());
    for (const Label& l : p_labels) out.insert(out.end(), l.begin(), l.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool overlaps(const Label& x, const Label& y) { return overlap_value(x, y).has_value(); }

std::optional<int> overlap_value(const Label& x, const Label& y) {
    int bound = static_cast<int>(std::min(x.size(), y.size()));
    for (int i = 1; i <= bound; ++i)
        if (std::equal(x.end() - i, x.end(), y.begin())) return i;
    return std::nullopt;
}

namespace detail {

VerificationReport verify_pairwise(const BipartiteGraph& g, const Labeling& l) {
    VerificationReport report;
    for (int s = 0; s < g.ns(); ++s)
        for (int p = 0; p < g.np(); ++p) {
            bool ov = overlaps(l.s_labels[s], l.p_labels[p]);
            bool e = g.has_edge(s, p);
            if (e && !ov) report.missing.emplace_back(s, p);
            if (!e && ov) report.extra.emplace_back(s, p);
        }
    report.ok = report.missing.empty() && report.extra.empty();
    return report;
}

namespace {

/// Prefix trie over the p-labels.  The node reached by consuming a word w
/// lists every p-vertex whose label has prefix w (and length >= |w|), so a
/// suffix of an s-label that is consumed completely marks exactly the
/// p-labels it overlaps at that length.
struct PrefixTrie {
    struct Node {
        std::vector<std::pair<Symbol, int>> kids;  // sorted by symbol
        std::vector<int> through;                  // p-indices passing here
    };
    std::vector<Node> nodes;

    explicit PrefixTrie(const std::vector<Label>& labels) {
        nodes.emplace_back();
        for (int j = 0; j < static_cast<int>(labels.size()); ++j) {
            int cur = 0;
            for (Symbol sym : labels[j]) {
                int next = -1;
                auto& kids = nodes[cur].kids;
                auto it = std::lower_bound(kids.begin(), kids.end(),
                                           std::make_pair(sym, -1));
                if (it != kids.end() && it->first == sym) {
                    next = it->second;
                } else {
                    next = static_cast<int>(nodes.size());
                    kids.insert(it, {sym, next});
                    nodes.emplace_back();
                }
                nodes[next].through.push_back(j);
                cur = next;
            }
        }
    }

    int step(int node, Symbol sym) const {
        const auto& kids = nodes[node].kids;
        auto it = std::lower_bound(kids.begin(), kids.end(), std::make_pair(sym, -1));
        if (it != kids.end() && it->first == sym) return it->second;
        return -1;
    }
};

}  // namespace

VerificationReport verify_batched(const BipartiteGraph& g, const Labeling& l) {
    VerificationReport report;
    PrefixTrie trie(l.p_labels);
    int words = g.s_row_words();
    std::vector<std::uint64_t> row(static_cast<std::size_t>(words));
    for (int s = 0; s < g.ns(); ++s) {
        std::fill(row.begin(), row.end(), 0);
        const Label& x = l.s_labels[s];
        int len = static_cast<int>(x.size());
        for (int q = 0; q < len; ++q) {
            int node = 0;
            for (int t = q; t < len; ++t) {
                node = trie.step(node, x[t]);
                if (node < 0) break;
            }
            if (node < 0) continue;
            for (int j : trie.nodes[node].through)
                row[static_cast<std::size_t>(j) / 64] |= std::uint64_t{1} << (j % 64);
        }
        const std::uint64_t* grow = g.s_row(s);
        for (int w = 0; w < words; ++w) {
            std::uint64_t diff = row[w] ^ grow[w];
            while (diff) {
                int b = std::countr_zero(diff);
                diff &= diff - 1;
                int p = w * 64 + b;
                if ((grow[w] >> b) & 1u)
                    report.missing.emplace_back(s, p);
                else
                    report.extra.emplace_back(s, p);
            }
        }
    }
    report.ok = report.missing.empty() && report.extra.empty();
    return report;
}

}  // namespace detail

VerificationReport verify(const BipartiteGraph& g, const Labeling& l) {
    if (static_cast<int>(l.s_labels.size()) != g.ns() ||
        static_cast<int>(l.p_labels.size()) != g.np())
        throw std::invalid_argument("labeling cardinality does not match graph");
    long long pairs = static_cast<long long>(g.ns()) * g.np();
    if (pairs > 1'000'000) return detail::verify_batched(g, l);
    return detail::verify_pairwise(g, l);
}

Labeling restrict_labeling(const Labeling& l, const std::vector<int>& s_keep,
                           const std::vector<int>& p_keep) {
    auto pick = [](const std::vector<Label>& all, const std::vector<int>& keep) {
        std::vector<Label> out;
        out.reserve(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) {
            int v = keep[i];
            if (v < 0 || v >= static_cast<int>(all.size()))
                throw std::invalid_argument("restrict: index out of range");
            if (i > 0 && keep[i] <= keep[i - 1])
                throw std::invalid_argument("restrict: indices not strictly ascending");
            out.push_back(all[v]);
        }
        return out;
    };
    return {pick(l.s_labels, s_keep), pick(l.p_labels, p_keep)};
}

Labeling union_disjoint(const Labeling& a, const Labeling& b) {
    Symbol offset = 0;
    std::vector<Symbol> aa = a.alphabet();
    if (!aa.empty()) offset = aa.back() + 1;
    Labeling out = a;
    auto shift = [&](const Label& l) {
        Label s = l;
        for (Symbol& sym : s) sym += offset;
        return s;
    };
    for (const Label& l : b.s_labels) out.s_labels.push_back(shift(l));
    for (const Label& l : b.p_labels) out.p_labels.push_back(shift(l));
    return out;
}

Labeling reverse_labeling(const Labeling& l) {
    Labeling out;
    out.s_labels = l.p_labels;
    out.p_labels = l.s_labels;
    for (Label& lab : out.s_labels) std::reverse(lab.begin(), lab.end());
    for (Label& lab : out.p_labels) std::reverse(lab.begin(), lab.end());
    return out;
}

Labeling lift_to_twins(const TwinFreeReduction& reduction, const Labeling& reduced) {
    if (reduced.s_labels.size() != reduction.classes.s_classes.size() ||
        reduced.p_labels.size() != reduction.classes.p_classes.size())
        throw std::invalid_argument("lift: labeling does not match reduction");
    Labeling out;
    out.s_labels.resize(reduction.classes.s_class_of.size());
    out.p_labels.resize(reduction.classes.p_class_of.size());
    for (std::size_t v = 0; v < out.s_labels.size(); ++v)
        out.s_labels[v] = reduced.s_labels[reduction.classes.s_class_of[v]];
    for (std::size_t v = 0; v < out.p_labels.size(); ++v)
        out.p_labels[v] = reduced.p_labels[reduction.classes.p_class_of[v]];
    return out;
}

Labeling biclique_labeling(const BipartiteGraph& g) {
    if (!is_p4_free(g)) throw std::invalid_argument("graph is not P4-free");
    Labeling out;
    out.s_labels.resize(g.ns());
    out.p_labels.resize(g.np());
    if (g.is_edgeless()) return out;
    std::vector<ComponentSplit> comps = connected_components(g);
    Symbol next_id = 0;
    for (const ComponentSplit& comp : comps)
        if (comp.graph.edge_count() > 0) ++next_id;
    Symbol id = 0, fresh = next_id;
    for (const ComponentSplit& comp : comps) {
        if (comp.graph.edge_count() > 0) {
            for (int s : comp.s_map) out.s_labels[s] = {id};
            for (int p : comp.p_map) out.p_labels[p] = {id};
            ++id;
        } else {
            for (int s : comp.s_map) out.s_labels[s] = {fresh++};
            for (int p : comp.p_map) out.p_labels[p] = {fresh++};
        }
    }
    return out;
}

}  // namespace overlap
