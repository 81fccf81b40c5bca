#include "overlap/grids.hpp"

#include <algorithm>
#include <stdexcept>

#include "overlap/graph_ops.hpp"
#include "overlap/readability2.hpp"

namespace overlap {

namespace {

bool even_parity(std::pair<int, int> cell) { return (cell.first + cell.second) % 2 == 0; }

CellEncoding encode_cells(const std::vector<std::pair<int, int>>& cells,
                          const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& edges) {
    CellEncoding enc;
    for (const auto& cell : cells) {
        if (even_parity(cell)) {
            enc.vertex_of[cell] = {Side::S, static_cast<int>(enc.s_cells.size())};
            enc.s_cells.push_back(cell);
        } else {
            enc.vertex_of[cell] = {Side::P, static_cast<int>(enc.p_cells.size())};
            enc.p_cells.push_back(cell);
        }
    }
    enc.graph = BipartiteGraph(static_cast<int>(enc.s_cells.size()),
                               static_cast<int>(enc.p_cells.size()));
    for (const auto& [a, b] : edges) {
        VertexRef va = enc.vertex_of.at(a), vb = enc.vertex_of.at(b);
        if (va.side == vb.side) throw std::invalid_argument("edge within one parity class");
        if (va.side == Side::S)
            enc.graph.add_edge(va.index, vb.index);
        else
            enc.graph.add_edge(vb.index, va.index);
    }
    return enc;
}

void validate_cells(const std::vector<std::pair<int, int>>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].first < 0 || cells[i].second < 0)
            throw std::invalid_argument("grid graph cells must be non-negative");
        if (i > 0 && cells[i] <= cells[i - 1])
            throw std::invalid_argument("grid graph cells must be sorted and unique");
    }
}

}  // namespace

CellEncoding grid(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("grid needs positive dimensions");
    GridGraphSpec spec;
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) spec.cells.emplace_back(r, c);
    return grid_graph(spec);
}

CellEncoding toroidal_grid(int m, int n) {
    if (m < 4 || n < 4 || m % 2 || n % 2)
        throw std::invalid_argument("toroidal grid needs even dimensions >= 4");
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) cells.emplace_back(r, c);
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> edges;
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) {
            edges.push_back({{r, c}, {(r + 1) % m, c}});
            edges.push_back({{r, c}, {r, (c + 1) % n}});
        }
    return encode_cells(cells, edges);
}

CellEncoding grid_graph(const GridGraphSpec& spec) {
    validate_cells(spec.cells);
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> edges;
    std::map<std::pair<int, int>, bool> present;
    for (const auto& cell : spec.cells) present[cell] = true;
    for (const auto& cell : spec.cells) {
        std::pair<int, int> right{cell.first, cell.second + 1};
        std::pair<int, int> down{cell.first + 1, cell.second};
        if (present.count(right)) edges.push_back({cell, right});
        if (present.count(down)) edges.push_back({cell, down});
    }
    return encode_cells(spec.cells, edges);
}

int TorusDecomposition::square_of(std::pair<int, int> cell) const {
    return square_id[cell.first][cell.second];
}

TorusDecomposition torus_decomposition(int n) {
    if (n < 1) throw std::invalid_argument("torus decomposition needs n >= 1");
    int side = 4 * n;
    TorusDecomposition dec;
    dec.n = n;
    dec.square_id.assign(side, std::vector<int>(side, -1));
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c)
            if ((r % 4 == 0 && c % 2 == 0) || (r % 4 == 2 && c % 2 == 1))
                dec.anchors.emplace_back(r, c);
    std::sort(dec.anchors.begin(), dec.anchors.end());
    for (int k = 0; k < static_cast<int>(dec.anchors.size()); ++k) {
        auto [r, c] = dec.anchors[k];
        int cells[4][2] = {{r, c}, {r, (c + 1) % side}, {(r + 1) % side, c},
                           {(r + 1) % side, (c + 1) % side}};
        for (auto& cell : cells) {
            if (dec.square_id[cell[0]][cell[1]] != -1)
                throw std::logic_error("anchored squares overlap");
            dec.square_id[cell[0]][cell[1]] = k;
        }
    }

    // Each cell has one in-square horizontal edge and one in-square
    // vertical edge; the other neighbor in each direction is its M1/M2
    // partner.
    dec.horizontal_partner.assign(side, std::vector<std::pair<int, int>>(side));
    dec.vertical_partner.assign(side, std::vector<std::pair<int, int>>(side));
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c) {
            int sq = dec.square_id[r][c];
            std::pair<int, int> up{(r + side - 1) % side, c}, down{(r + 1) % side, c};
            dec.horizontal_partner[r][c] =
                dec.square_id[down.first][down.second] == sq ? up : down;
            std::pair<int, int> left{r, (c + side - 1) % side}, right{r, (c + 1) % side};
            dec.vertical_partner[r][c] =
                dec.square_id[right.first][right.second] == sq ? left : right;
        }
    return dec;
}

bool TorusDecomposition::squares_partition_vertices() const {
    int side = 4 * n;
    if (static_cast<int>(anchors.size()) != 4 * n * n) return false;
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c)
            if (square_id[r][c] < 0) return false;
    return true;
}

bool TorusDecomposition::matchings_are_perfect_and_outside_squares() const {
    int side = 4 * n;
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c) {
            std::pair<int, int> cell{r, c};
            std::pair<int, int> h = horizontal_partner[r][c];
            bool h_adjacent =
                h.second == c && ((h.first + 1) % side == r || (r + 1) % side == h.first);
            if (h == cell || !h_adjacent) return false;
            if (square_id[h.first][h.second] == square_id[r][c]) return false;
            if (horizontal_partner[h.first][h.second] != cell) return false;
            std::pair<int, int> v = vertical_partner[r][c];
            bool v_adjacent =
                v.first == r && ((v.second + 1) % side == c || (c + 1) % side == v.second);
            if (v == cell || !v_adjacent) return false;
            if (square_id[v.first][v.second] == square_id[r][c]) return false;
            if (vertical_partner[v.first][v.second] != cell) return false;
        }
    return true;
}

bool TorusDecomposition::vertical_pairs_share_horizontal_square() const {
    int side = 4 * n;
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c) {
            std::pair<int, int> v = vertical_partner[r][c];
            std::pair<int, int> h1 = horizontal_partner[r][c];
            std::pair<int, int> h2 = horizontal_partner[v.first][v.second];
            if (square_id[h1.first][h1.second] != square_id[h2.first][h2.second])
                return false;
        }
    return true;
}

bool TorusDecomposition::squares_joined_by_at_most_one_horizontal_edge() const {
    int side = 4 * n;
    std::map<std::pair<int, int>, int> joined;
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c) {
            std::pair<int, int> h = horizontal_partner[r][c];
            if (std::pair<int, int>{r, c} < h) {
                int a = square_id[r][c], b = square_id[h.first][h.second];
                // Two squares may be joined once per orientation, so the key
                // leads with the square holding the even-parity endpoint.
                std::pair<int, int> key = (r + c) % 2 == 0 ? std::pair<int, int>{a, b}
                                                           : std::pair<int, int>{b, a};
                if (++joined[key] > 1) return false;
            }
        }
    return true;
}

Labeling torus_labeling(int n) {
    TorusDecomposition dec = torus_decomposition(n);
    CellEncoding enc = toroidal_grid(4 * n, 4 * n);
    Labeling out;
    out.s_labels.resize(enc.s_cells.size());
    out.p_labels.resize(enc.p_cells.size());
    auto label_cell = [&](std::pair<int, int> cell, bool s_side) {
        Symbol own = dec.square_of(cell);
        std::pair<int, int> h = dec.horizontal_partner[cell.first][cell.second];
        std::pair<int, int> v = dec.vertical_partner[cell.first][cell.second];
        Symbol via_h = dec.square_of(h), via_v = dec.square_of(v);
        return s_side ? Label{via_v, via_h, own} : Label{own, via_h, via_v};
    };
    for (std::size_t i = 0; i < enc.s_cells.size(); ++i)
        out.s_labels[i] = label_cell(enc.s_cells[i], true);
    for (std::size_t i = 0; i < enc.p_cells.size(); ++i)
        out.p_labels[i] = label_cell(enc.p_cells[i], false);
    return out;
}

int grid_readability(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("grid needs positive dimensions");
    if (m > n) std::swap(m, n);
    if (m == 1) {
        if (n == 1) return 0;
        return n <= 3 ? 1 : 2;
    }
    if (m == 2) return n == 2 ? 1 : 2;
    return 3;
}

GridDecision grid_graph_readability(const GridGraphSpec& spec) {
    GridDecision out;
    out.encoding = grid_graph(spec);
    const BipartiteGraph& g = out.encoding.graph;

    if (g.is_edgeless()) {
        out.value = 0;
        out.witness.s_labels.resize(g.ns());
        out.witness.p_labels.resize(g.np());
        return out;
    }
    if (is_p4_free(g)) {
        out.value = 1;
        out.witness = biclique_labeling(g);
        return out;
    }
    Decision2 d2 = decide_readability_le2(g);
    if (d2.yes) {
        out.value = 2;
        out.witness = *d2.labeling;
        return out;
    }

    // Readability 3: embed the cells into a large enough torus with a one
    // cell margin against wraparound, restrict its labeling, and flip
    // sides back when the translation changed coordinate parity.
    out.value = 3;
    int min_r = spec.cells[0].first, min_c = spec.cells[0].second;
    for (const auto& [r, c] : spec.cells) {
        min_r = std::min(min_r, r);
        min_c = std::min(min_c, c);
    }
    int max_coord = 0;
    for (const auto& [r, c] : spec.cells)
        max_coord = std::max({max_coord, r - min_r, c - min_c});
    int n = 1;
    while (4 * n < max_coord + 2) ++n;
    bool flip = (min_r + min_c) % 2 != 0;

    Labeling full = torus_labeling(n);
    CellEncoding torus = toroidal_grid(4 * n, 4 * n);
    std::vector<int> keep_s, keep_p;
    for (const auto& [r, c] : spec.cells) {
        VertexRef v = torus.vertex_of.at({r - min_r, c - min_c});
        (v.side == Side::S ? keep_s : keep_p).push_back(v.index);
    }
    std::sort(keep_s.begin(), keep_s.end());
    std::sort(keep_p.begin(), keep_p.end());
    Labeling restricted = restrict_labeling(full, keep_s, keep_p);
    out.witness = flip ? reverse_labeling(restricted) : restricted;

    VerificationReport report = verify(g, out.witness);
    if (!report.ok) throw std::logic_error("torus restriction failed verification");
    return out;
}

}  // namespace overlap
