#include "overlap/patterns.hpp"

#include <algorithm>
#include <bit>

namespace overlap {

namespace {

std::vector<int> vertices_of_degree_at_least(const BipartiteGraph& g, Side side, int d) {
    std::vector<int> out;
    int n = side == Side::S ? g.ns() : g.np();
    for (int i = 0; i < n; ++i) {
        int deg = side == Side::S ? g.s_degree(i) : g.p_degree(i);
        if (deg >= d) out.push_back(i);
    }
    return out;
}

void sort_occurrences(std::vector<PatternOccurrence>& occs) {
    auto key = [](const PatternOccurrence& o) {
        std::vector<VertexRef> k = o.vertices;
        std::sort(k.begin(), k.end());
        return k;
    };
    std::sort(occs.begin(), occs.end(), [&](const PatternOccurrence& a, const PatternOccurrence& b) {
        return key(a) < key(b);
    });
}

std::vector<PatternOccurrence> enumerate_c4(const BipartiteGraph& g) {
    std::vector<PatternOccurrence> out;
    int words = g.s_row_words();
    for (int u = 0; u < g.ns(); ++u) {
        for (int u2 = u + 1; u2 < g.ns(); ++u2) {
            const std::uint64_t* ru = g.s_row(u);
            const std::uint64_t* ru2 = g.s_row(u2);
            std::vector<int> common;
            for (int w = 0; w < words; ++w) {
                std::uint64_t bits = ru[w] & ru2[w];
                while (bits) {
                    common.push_back(w * 64 + std::countr_zero(bits));
                    bits &= bits - 1;
                }
            }
            for (std::size_t a = 0; a < common.size(); ++a)
                for (std::size_t b = a + 1; b < common.size(); ++b) {
                    int v = common[a], v2 = common[b];
                    PatternOccurrence occ;
                    occ.kind = PatternKind::C4;
                    occ.vertices = {{Side::S, u}, {Side::P, v}, {Side::S, u2}, {Side::P, v2}};
                    occ.edges = {{u, v}, {u2, v}, {u2, v2}, {u, v2}};
                    out.push_back(std::move(occ));
                }
        }
    }
    return out;
}

/// Both six-vertex patterns live on an S-triple and a P-triple; a C6 is
/// the 2-regular case (6 edges), a domino is the 7-edge case whose two
/// non-edges are vertex-disjoint. In either pattern every S-pair shares a
/// P-vertex and every P-vertex sees at least two of the S-triple, so the
/// scan only visits triples passing those filters.
template <class F>
void scan_six_vertex_patterns(const BipartiteGraph& g, F&& handle) {
    std::vector<int> ss = vertices_of_degree_at_least(g, Side::S, 2);
    int words = g.s_row_words();
    std::vector<std::uint64_t> ij(words);
    std::vector<int> cand;
    for (std::size_t i = 0; i < ss.size(); ++i) {
        const std::uint64_t* ri = g.s_row(ss[i]);
        for (std::size_t j = i + 1; j < ss.size(); ++j) {
            const std::uint64_t* rj = g.s_row(ss[j]);
            bool linked = false;
            for (int w = 0; w < words; ++w) {
                ij[w] = ri[w] & rj[w];
                if (ij[w]) linked = true;
            }
            if (!linked) continue;
            for (std::size_t k = j + 1; k < ss.size(); ++k) {
                const std::uint64_t* rk = g.s_row(ss[k]);
                bool ik = false, jk = false;
                for (int w = 0; w < words; ++w) {
                    if (ri[w] & rk[w]) ik = true;
                    if (rj[w] & rk[w]) jk = true;
                }
                if (!ik || !jk) continue;
                cand.clear();
                for (int w = 0; w < words; ++w) {
                    std::uint64_t bits = ij[w] | (ri[w] & rk[w]) | (rj[w] & rk[w]);
                    while (bits) {
                        cand.push_back(w * 64 + std::countr_zero(bits));
                        bits &= bits - 1;
                    }
                }
                if (cand.size() < 3) continue;
                int s[3] = {ss[i], ss[j], ss[k]};
                for (std::size_t a = 0; a < cand.size(); ++a)
                    for (std::size_t b = a + 1; b < cand.size(); ++b)
                        for (std::size_t c = b + 1; c < cand.size(); ++c) {
                            int p[3] = {cand[a], cand[b], cand[c]};
                            handle(s, p);
                        }
            }
        }
    }
}

std::vector<PatternOccurrence> enumerate_c6(const BipartiteGraph& g) {
    std::vector<PatternOccurrence> out;
    scan_six_vertex_patterns(g, [&](const int s[3], const int p[3]) {
        bool adj[3][3];
        int rows[3] = {0, 0, 0}, cols[3] = {0, 0, 0}, total = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                adj[i][j] = g.has_edge(s[i], p[j]);
                if (adj[i][j]) ++rows[i], ++cols[j], ++total;
            }
        if (total != 6 || rows[0] != 2 || rows[1] != 2 || rows[2] != 2 || cols[0] != 2 ||
            cols[1] != 2 || cols[2] != 2)
            return;
        // Walk the cycle from the smallest S vertex toward its smaller
        // neighbor.
        int x1 = 0;
        int nb[2], t = 0;
        for (int j = 0; j < 3; ++j)
            if (adj[x1][j]) nb[t++] = j;
        int x2 = nb[0], x6 = nb[1];
        int x3 = -1, x5 = -1, x4 = -1;
        for (int i = 0; i < 3; ++i)
            if (i != x1 && adj[i][x2]) x3 = i;
        for (int i = 0; i < 3; ++i)
            if (i != x1 && i != x3) x5 = i;
        for (int j = 0; j < 3; ++j)
            if (j != x2 && adj[x3][j]) x4 = j;
        PatternOccurrence occ;
        occ.kind = PatternKind::C6;
        occ.vertices = {{Side::S, s[x1]}, {Side::P, p[x2]}, {Side::S, s[x3]},
                        {Side::P, p[x4]}, {Side::S, s[x5]}, {Side::P, p[x6]}};
        occ.edges = {{s[x1], p[x2]}, {s[x3], p[x2]}, {s[x3], p[x4]},
                     {s[x5], p[x4]}, {s[x5], p[x6]}, {s[x1], p[x6]}};
        out.push_back(std::move(occ));
    });
    return out;
}

std::vector<PatternOccurrence> enumerate_domino(const BipartiteGraph& g) {
    std::vector<PatternOccurrence> out;
    scan_six_vertex_patterns(g, [&](const int s[3], const int p[3]) {
        int zr[2], zc[2], zeros = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (!g.has_edge(s[i], p[j])) {
                    if (zeros == 2) return;
                    zr[zeros] = i;
                    zc[zeros] = j;
                    ++zeros;
                }
        if (zeros != 2 || zr[0] == zr[1] || zc[0] == zc[1]) return;
        // The degree-3 vertices are the row/column untouched by a zero;
        // they carry the chord.
        int x3 = 3 - zr[0] - zr[1];
        int x6 = 3 - zc[0] - zc[1];
        int q[2], t = 0;
        for (int j = 0; j < 3; ++j)
            if (j != x6) q[t++] = j;
        int x4 = q[0], x2 = q[1];
        // Zeros are (x1, x4) and (x5, x2).
        int x1 = zr[0], x5 = zr[1];
        if (zc[0] != x4) std::swap(x1, x5);
        PatternOccurrence occ;
        occ.kind = PatternKind::Domino;
        occ.vertices = {{Side::S, s[x1]}, {Side::P, p[x2]}, {Side::S, s[x3]},
                        {Side::P, p[x4]}, {Side::S, s[x5]}, {Side::P, p[x6]}};
        occ.edges = {{s[x1], p[x2]}, {s[x3], p[x2]}, {s[x3], p[x4]}, {s[x5], p[x4]},
                     {s[x5], p[x6]}, {s[x1], p[x6]}, {s[x3], p[x6]}};
        out.push_back(std::move(occ));
    });
    return out;
}

std::vector<PatternOccurrence> enumerate_fork(const BipartiteGraph& g) {
    std::vector<PatternOccurrence> out;
    auto scan_side = [&](Side center_side) {
        int n = center_side == Side::S ? g.ns() : g.np();
        for (int c = 0; c < n; ++c) {
            std::vector<int> cnbrs =
                center_side == Side::S ? g.s_neighbors(c) : g.p_neighbors(c);
            if (cnbrs.size() < 3) continue;
            for (int d : cnbrs) {
                std::vector<int> dnbrs =
                    center_side == Side::S ? g.p_neighbors(d) : g.s_neighbors(d);
                for (int t : dnbrs) {
                    if (t == c) continue;
                    auto tail_adjacent = [&](int leaf) {
                        return center_side == Side::S ? g.has_edge(t, leaf)
                                                      : g.has_edge(leaf, t);
                    };
                    for (std::size_t ia = 0; ia < cnbrs.size(); ++ia) {
                        int a = cnbrs[ia];
                        if (a == d || tail_adjacent(a)) continue;
                        for (std::size_t ib = ia + 1; ib < cnbrs.size(); ++ib) {
                            int b = cnbrs[ib];
                            if (b == d || tail_adjacent(b)) continue;
                            Side leaf_side = center_side == Side::S ? Side::P : Side::S;
                            PatternOccurrence occ;
                            occ.kind = PatternKind::Fork;
                            occ.vertices = {{leaf_side, a},
                                            {center_side, c},
                                            {leaf_side, d},
                                            {center_side, t},
                                            {leaf_side, b}};
                            if (center_side == Side::S)
                                occ.edges = {{c, a}, {c, d}, {t, d}, {c, b}};
                            else
                                occ.edges = {{a, c}, {d, c}, {d, t}, {b, c}};
                            out.push_back(std::move(occ));
                        }
                    }
                }
            }
        }
    };
    scan_side(Side::S);
    scan_side(Side::P);
    return out;
}

}  // namespace

std::vector<PatternOccurrence> enumerate_patterns(const BipartiteGraph& g, PatternKind kind) {
    std::vector<PatternOccurrence> out;
    switch (kind) {
        case PatternKind::C4: out = enumerate_c4(g); break;
        case PatternKind::C6: out = enumerate_c6(g); break;
        case PatternKind::Domino: out = enumerate_domino(g); break;
        case PatternKind::Fork: out = enumerate_fork(g); break;
    }
    sort_occurrences(out);
    return out;
}

}  // namespace overlap
