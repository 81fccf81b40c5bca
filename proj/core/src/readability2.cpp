#include "overlap/readability2.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace overlap {

namespace {

std::set<std::pair<int, int>> edge_set(const Matching& m) {
    return {m.edges.begin(), m.edges.end()};
}

bool vertex_disjoint(const std::vector<std::pair<int, int>>& edges) {
    std::set<int> ss, ps;
    for (const auto& [s, p] : edges) {
        if (!ss.insert(s).second || !ps.insert(p).second) return false;
    }
    return true;
}

}  // namespace

bool is_matching(const BipartiteGraph& g, const Matching& m) {
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        if (i > 0 && m.edges[i] <= m.edges[i - 1]) return false;
        if (!g.has_edge(m.edges[i].first, m.edges[i].second)) return false;
    }
    return vertex_disjoint(m.edges);
}

bool is_feasible_matching(const BipartiteGraph& g, const Matching& m) {
    if (!is_twin_free(g)) throw std::invalid_argument("graph has twins");
    if (!is_matching(g, m)) throw std::invalid_argument("not a matching of the graph");
    return detail::feasible_against_patterns(g, m, enumerate_patterns(g, PatternKind::C6),
                                             enumerate_patterns(g, PatternKind::Domino));
}

bool detail::feasible_against_patterns(const BipartiteGraph& g, const Matching& m,
                                       const std::vector<PatternOccurrence>& c6s,
                                       const std::vector<PatternOccurrence>& dominoes) {
    BipartiteGraph rest = g.minus(m.edges);
    if (!is_p4_free(rest)) return false;

    std::set<std::pair<int, int>> in_m = edge_set(m);
    auto remaining = [&](const PatternOccurrence& occ) {
        std::vector<std::pair<int, int>> left;
        for (const auto& e : occ.edges)
            if (!in_m.count(e)) left.push_back(e);
        return left;
    };

    for (const PatternOccurrence& occ : c6s) {
        std::vector<std::pair<int, int>> left = remaining(occ);
        if (left.size() != 3 || !vertex_disjoint(left)) return false;
    }
    for (const PatternOccurrence& occ : dominoes) {
        std::vector<std::pair<int, int>> left = remaining(occ);
        if (left.size() != 5) return false;
        // A C4 plus a disjoint edge: degree profile 2,2,2,2 and 1,1 with
        // the two degree-1 vertices joined to each other.
        std::map<VertexRef, int> deg;
        for (const auto& [s, p] : left) {
            ++deg[{Side::S, s}];
            ++deg[{Side::P, p}];
        }
        std::vector<VertexRef> ones;
        bool profile_ok = true;
        for (const auto& [v, d] : deg) {
            if (d == 1)
                ones.push_back(v);
            else if (d != 2)
                profile_ok = false;
        }
        if (!profile_ok || deg.size() != 6 || ones.size() != 2) return false;
        if (ones[0].side != Side::S || ones[1].side != Side::P) return false;
        bool pendant = false;
        for (const auto& [s, p] : left)
            if (s == ones[0].index && p == ones[1].index) pendant = true;
        if (!pendant) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> constrained_edge_set(const BipartiteGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("constrained edge set: graph not connected");
    if (g.max_degree() < 3)
        throw std::invalid_argument("constrained edge set: maximum degree below 3");

    std::vector<bool> s_big(g.ns()), p_big(g.np());
    for (int s = 0; s < g.ns(); ++s) s_big[s] = g.s_degree(s) >= 3;
    for (int p = 0; p < g.np(); ++p) p_big[p] = g.p_degree(p) >= 3;

    std::set<std::pair<int, int>> on_c6;
    for (const PatternOccurrence& occ : enumerate_patterns(g, PatternKind::C6))
        for (const auto& e : occ.edges) on_c6.insert(e);

    std::vector<std::pair<int, int>> out;
    g.for_each_edge([&](int s, int p) {
        bool in = s_big[s] || p_big[p];
        if (!in)
            for (int q : g.s_neighbors(s))
                if (p_big[q]) {
                    in = true;
                    break;
                }
        if (!in)
            for (int t : g.p_neighbors(p))
                if (s_big[t]) {
                    in = true;
                    break;
                }
        if (!in && on_c6.count({s, p})) in = true;
        if (in) out.emplace_back(s, p);
    });
    return out;
}

namespace {

struct FormulaBuilder {
    std::map<std::pair<int, int>, int> var_of;
    TwoSatFormula* formula;

    int var(const std::pair<int, int>& e) const {
        auto it = var_of.find(e);
        if (it == var_of.end())
            throw std::logic_error("pattern edge outside the constrained edge set");
        return it->second;
    }
    void add(TwoSatLiteral a, TwoSatLiteral b, int rule, int source) {
        formula->clauses.push_back({a, b, rule, source});
    }
    void either(const std::pair<int, int>& e, const std::pair<int, int>& f, int rule,
                int source) {
        add({var(e), true}, {var(f), true}, rule, source);
    }
    void equal(const std::pair<int, int>& e, const std::pair<int, int>& f, int rule,
               int source) {
        add({var(e), false}, {var(f), true}, rule, source);
        add({var(f), false}, {var(e), true}, rule, source);
    }
};

}  // namespace

ClauseBuild build_formula(const BipartiteGraph& g,
                          const std::vector<std::pair<int, int>>& e_prime) {
    ClauseBuild out;
    out.variable_edges = e_prime;
    std::sort(out.variable_edges.begin(), out.variable_edges.end());
    out.formula.num_vars = static_cast<int>(out.variable_edges.size());

    FormulaBuilder fb{{}, &out.formula};
    for (int v = 0; v < out.formula.num_vars; ++v) fb.var_of[out.variable_edges[v]] = v;

    // Rule 1: no two constrained edges sharing an endpoint.
    std::vector<std::vector<int>> at_s(g.ns()), at_p(g.np());
    for (int v = 0; v < out.formula.num_vars; ++v) {
        at_s[out.variable_edges[v].first].push_back(v);
        at_p[out.variable_edges[v].second].push_back(v);
    }
    auto exclude_pairs = [&](const std::vector<std::vector<int>>& at) {
        for (const std::vector<int>& vars : at)
            for (std::size_t i = 0; i < vars.size(); ++i)
                for (std::size_t j = i + 1; j < vars.size(); ++j)
                    fb.add({vars[i], false}, {vars[j], false}, 1, -1);
    };
    exclude_pairs(at_s);
    exclude_pairs(at_p);

    // Rule 2: each induced C4 uses one of its two perfect matchings as a
    // unit.
    out.c4s = enumerate_patterns(g, PatternKind::C4);
    for (int i = 0; i < static_cast<int>(out.c4s.size()); ++i) {
        const auto& e = out.c4s[i].edges;
        fb.equal(e[0], e[2], 2, i);
        fb.equal(e[1], e[3], 2, i);
    }

    // Rule 3: each induced C6 keeps one alternating edge triple.
    out.c6s = enumerate_patterns(g, PatternKind::C6);
    for (int i = 0; i < static_cast<int>(out.c6s.size()); ++i) {
        const auto& e = out.c6s[i].edges;
        fb.either(e[0], e[1], 3, i);
        fb.equal(e[0], e[2], 3, i);
        fb.equal(e[2], e[4], 3, i);
        fb.equal(e[1], e[3], 3, i);
        fb.equal(e[3], e[5], 3, i);
    }

    // Rule 4: each induced domino keeps one cycle edge at both chord
    // endpoints.
    out.dominoes = enumerate_patterns(g, PatternKind::Domino);
    for (int i = 0; i < static_cast<int>(out.dominoes.size()); ++i) {
        const auto& e = out.dominoes[i].edges;
        fb.either(e[1], e[2], 4, i);
        fb.either(e[4], e[5], 4, i);
    }

    // Rule 5: each induced fork covers its center-stem-tail path.
    out.forks = enumerate_patterns(g, PatternKind::Fork);
    for (int i = 0; i < static_cast<int>(out.forks.size()); ++i) {
        const auto& e = out.forks[i].edges;
        fb.either(e[1], e[2], 5, i);
    }
    return out;
}

Matching extract_matching(const BipartiteGraph& g, const ClauseBuild& build,
                          const std::vector<bool>& assignment) {
    if (assignment.size() != static_cast<std::size_t>(build.formula.num_vars))
        throw std::invalid_argument("assignment size does not match formula");
    std::set<std::pair<int, int>> m;
    for (int v = 0; v < build.formula.num_vars; ++v)
        if (assignment[v]) m.insert(build.variable_edges[v]);

    // Greedy extension: add the middle edge of any induced P4 none of
    // whose edges is matched yet, rescanning until fixpoint.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < g.ns(); ++u)
            for (int v : g.s_neighbors(u)) {
                if (m.count({u, v})) continue;
                bool added = false;
                for (int x1 : g.s_neighbors(u)) {
                    if (x1 == v || m.count({u, x1})) continue;
                    for (int x4 : g.p_neighbors(v)) {
                        if (x4 == u || g.has_edge(x4, x1) || m.count({x4, v})) continue;
                        m.insert({u, v});
                        changed = true;
                        added = true;
                        break;
                    }
                    if (added) break;
                }
            }
    }

    Matching out;
    out.edges.assign(m.begin(), m.end());
    if (!is_matching(g, out))
        throw std::logic_error("extracted edge set is not a matching");
    return out;
}

Labeling labeling_from_matching(const BipartiteGraph& g, const Matching& m) {
    if (!is_matching(g, m)) throw std::invalid_argument("not a matching of the graph");
    if (!detail::feasible_against_patterns(g, m, enumerate_patterns(g, PatternKind::C6),
                                           enumerate_patterns(g, PatternKind::Domino)))
        throw std::invalid_argument("matching is not feasible");
    BipartiteGraph rest = g.minus(m.edges);
    std::vector<ComponentSplit> comps = connected_components(rest);
    std::vector<int> s_comp(g.ns()), p_comp(g.np());
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
        for (int s : comps[c].s_map) s_comp[s] = c;
        for (int p : comps[c].p_map) p_comp[p] = c;
    }

    Labeling out;
    out.s_labels.resize(g.ns());
    out.p_labels.resize(g.np());
    for (int s = 0; s < g.ns(); ++s) out.s_labels[s] = {s_comp[s]};
    for (int p = 0; p < g.np(); ++p) out.p_labels[p] = {p_comp[p]};
    for (const auto& [s, p] : m.edges) {
        Label joint = {p_comp[p], s_comp[s]};
        out.s_labels[s] = joint;
        out.p_labels[p] = joint;
    }

    Symbol fresh = static_cast<Symbol>(comps.size());
    for (int s = 0; s < g.ns(); ++s)
        if (out.s_labels[s].size() == 1)
            out.s_labels[s].insert(out.s_labels[s].begin(), fresh++);
    for (int p = 0; p < g.np(); ++p)
        if (out.p_labels[p].size() == 1) out.p_labels[p].push_back(fresh++);
    return out;
}

namespace {

/// Alternating matching of a component whose maximum degree is at most 2
/// (a path or an even cycle): every other edge along the canonical walk.
Matching alternating_matching(const BipartiteGraph& g) {
    Matching m;
    if (g.edge_count() <= 1) return m;

    auto neighbors = [&](VertexRef v) {
        std::vector<VertexRef> out;
        if (v.side == Side::S)
            for (int p : g.s_neighbors(v.index)) out.push_back({Side::P, p});
        else
            for (int s : g.p_neighbors(v.index)) out.push_back({Side::S, s});
        return out;
    };

    // Walk the path from its smallest endpoint, or the cycle from its
    // smallest vertex toward its smaller neighbor, and keep every other
    // edge.
    std::optional<VertexRef> start;
    for (int s = 0; s < g.ns() && !start; ++s)
        if (g.s_degree(s) == 1) start = VertexRef{Side::S, s};
    for (int p = 0; p < g.np() && !start; ++p)
        if (g.p_degree(p) == 1) start = VertexRef{Side::P, p};
    for (int s = 0; s < g.ns() && !start; ++s)
        if (g.s_degree(s) > 0) start = VertexRef{Side::S, s};
    if (!start) throw std::logic_error("component with edges but no start vertex");

    VertexRef cur = *start;
    std::optional<VertexRef> prev;
    for (long long i = 0; i < g.edge_count(); ++i) {
        std::vector<VertexRef> nbrs = neighbors(cur);
        VertexRef next = nbrs[0];
        if (prev && next == *prev) next = nbrs[1];
        if (i % 2 == 0) {
            if (cur.side == Side::S)
                m.edges.emplace_back(cur.index, next.index);
            else
                m.edges.emplace_back(next.index, cur.index);
        }
        prev = cur;
        cur = next;
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

}  // namespace

Decision2 decide_readability_le2(const BipartiteGraph& g) {
    Decision2 out;
    out.reduction = twin_free_reduction(g);
    const BipartiteGraph& gr = out.reduction.graph;

    bool all_ok = true;
    std::vector<ComponentSplit> comps = connected_components(gr);
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
        ComponentAnalysis ca;
        ca.s_map = comps[ci].s_map;
        ca.p_map = comps[ci].p_map;
        const BipartiteGraph& cg = comps[ci].graph;
        if (cg.max_degree() <= 2) {
            ca.used_shortcut = true;
            ca.matching = alternating_matching(cg);
            ca.satisfied = true;
        } else {
            std::vector<std::pair<int, int>> ep = constrained_edge_set(cg);
            ca.clauses = build_formula(cg, ep);
            std::optional<std::vector<bool>> model = solve_2sat(ca.clauses->formula);
            if (model) {
                ca.assignment = *model;
                ca.matching = extract_matching(cg, *ca.clauses, *model);
                ca.satisfied = true;
            } else {
                ca.satisfied = false;
                all_ok = false;
                if (!out.unsat_component) out.unsat_component = ci;
            }
        }
        out.components.push_back(std::move(ca));
    }

    out.yes = all_ok;
    if (!all_ok) return out;

    Matching global;
    for (const ComponentAnalysis& ca : out.components)
        for (const auto& [ls, lp] : ca.matching.edges)
            global.edges.emplace_back(ca.s_map[ls], ca.p_map[lp]);
    std::sort(global.edges.begin(), global.edges.end());
    out.matching = global;

    Labeling reduced = labeling_from_matching(gr, global);
    out.labeling = lift_to_twins(out.reduction, reduced);
    VerificationReport report = verify(g, *out.labeling);
    if (!report.ok) throw std::logic_error("witness labeling failed verification");
    return out;
}

}  // namespace overlap
