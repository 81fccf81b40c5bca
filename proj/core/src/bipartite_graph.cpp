#include "overlap/bipartite_graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace overlap {

namespace {

int popcount_row(const std::uint64_t* row, int words) {
    int total = 0;
    for (int w = 0; w < words; ++w) total += std::popcount(row[w]);
    return total;
}

}  // namespace

BipartiteGraph::BipartiteGraph(int ns, int np) : ns_(ns), np_(np) {
    if (ns < 0 || np < 0) throw std::invalid_argument("negative side size");
    sw_ = (ns + 63) / 64;
    pw_ = (np + 63) / 64;
    srows_.assign(static_cast<std::size_t>(ns_) * pw_, 0);
    prows_.assign(static_cast<std::size_t>(np_) * sw_, 0);
}

BipartiteGraph BipartiteGraph::from_edges(int ns, int np,
                                          const std::vector<std::pair<int, int>>& edges) {
    BipartiteGraph g(ns, np);
    for (const auto& [s, p] : edges) g.add_edge(s, p);
    return g;
}

int BipartiteGraph::count_trailing(std::uint64_t v) { return std::countr_zero(v); }

void BipartiteGraph::check_range(int s, int p) const {
    if (s < 0 || s >= ns_ || p < 0 || p >= np_)
        throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(s) +
                                    ", " + std::to_string(p) + ")");
}

bool BipartiteGraph::has_edge(int s, int p) const {
    check_range(s, p);
    return (srows_[static_cast<std::size_t>(s) * pw_ + p / 64] >> (p % 64)) & 1u;
}

void BipartiteGraph::add_edge(int s, int p) {
    check_range(s, p);
    std::uint64_t& word = srows_[static_cast<std::size_t>(s) * pw_ + p / 64];
    std::uint64_t mask = std::uint64_t{1} << (p % 64);
    if (word & mask)
        throw std::invalid_argument("duplicate edge (" + std::to_string(s) + ", " +
                                    std::to_string(p) + ")");
    word |= mask;
    prows_[static_cast<std::size_t>(p) * sw_ + s / 64] |= std::uint64_t{1} << (s % 64);
    ++edge_count_;
}

void BipartiteGraph::remove_edge(int s, int p) {
    check_range(s, p);
    std::uint64_t& word = srows_[static_cast<std::size_t>(s) * pw_ + p / 64];
    std::uint64_t mask = std::uint64_t{1} << (p % 64);
    if (!(word & mask))
        throw std::invalid_argument("edge not present (" + std::to_string(s) + ", " +
                                    std::to_string(p) + ")");
    word &= ~mask;
    prows_[static_cast<std::size_t>(p) * sw_ + s / 64] &= ~(std::uint64_t{1} << (s % 64));
    --edge_count_;
}

int BipartiteGraph::s_degree(int s) const {
    if (s < 0 || s >= ns_) throw std::invalid_argument("s index out of range");
    return popcount_row(s_row(s), pw_);
}

int BipartiteGraph::p_degree(int p) const {
    if (p < 0 || p >= np_) throw std::invalid_argument("p index out of range");
    return popcount_row(p_row(p), sw_);
}

int BipartiteGraph::degree(VertexRef v) const {
    return v.side == Side::S ? s_degree(v.index) : p_degree(v.index);
}

int BipartiteGraph::max_degree() const {
    int best = 0;
    for (int s = 0; s < ns_; ++s) best = std::max(best, s_degree(s));
    for (int p = 0; p < np_; ++p) best = std::max(best, p_degree(p));
    return best;
}

std::vector<int> BipartiteGraph::s_neighbors(int s) const {
    std::vector<int> out;
    const std::uint64_t* row = s_row(s);
    for (int w = 0; w < pw_; ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<int> BipartiteGraph::p_neighbors(int p) const {
    std::vector<int> out;
    const std::uint64_t* row = p_row(p);
    for (int w = 0; w < sw_; ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

const std::uint64_t* BipartiteGraph::s_row(int s) const {
    return srows_.data() + static_cast<std::size_t>(s) * pw_;
}

const std::uint64_t* BipartiteGraph::p_row(int p) const {
    return prows_.data() + static_cast<std::size_t>(p) * sw_;
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for_each_edge([&](int s, int p) { out.emplace_back(s, p); });
    return out;
}

BipartiteGraph BipartiteGraph::transposed() const {
    BipartiteGraph t(np_, ns_);
    t.srows_ = prows_;
    t.prows_ = srows_;
    t.edge_count_ = edge_count_;
    return t;
}

BipartiteGraph BipartiteGraph::minus(const std::vector<std::pair<int, int>>& removed) const {
    BipartiteGraph g = *this;
    for (const auto& [s, p] : removed) g.remove_edge(s, p);
    return g;
}

}  // namespace overlap
