#include "overlap/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace overlap {

namespace {

/// Yields the non-empty lines of a stream as token vectors, tracking the
/// 1-based line number and stripping '#' comments.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_;
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream parts(line);
            tokens.clear();
            std::string token;
            while (parts >> token) tokens.push_back(token);
            if (!tokens.empty()) return true;
        }
        return false;
    }

    int line() const { return line_ == 0 ? 1 : line_; }

private:
    std::istream& in_;
    int line_ = 0;
};

long long parse_int(const LineReader& reader, const std::string& token) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        throw ParseError(reader.line(), "expected an integer, got '" + token + "'");
    }
    if (used != token.size())
        throw ParseError(reader.line(), "expected an integer, got '" + token + "'");
    return value;
}

int parse_index(const LineReader& reader, const std::string& token, int bound,
                const std::string& what) {
    long long value = parse_int(reader, token);
    if (value < 0 || value >= bound)
        throw ParseError(reader.line(), what + " out of range: " + token);
    return static_cast<int>(value);
}

}  // namespace

BipartiteGraph read_graph(std::istream& in) {
    LineReader reader(in);
    std::vector<std::string> tokens;
    if (!reader.next(tokens)) throw ParseError(reader.line(), "missing 'bipartite' header");
    if (tokens.size() != 3 || tokens[0] != "bipartite")
        throw ParseError(reader.line(), "expected 'bipartite <ns> <np>'");
    long long ns = parse_int(reader, tokens[1]), np = parse_int(reader, tokens[2]);
    if (ns < 0 || np < 0 || ns > 1'000'000 || np > 1'000'000)
        throw ParseError(reader.line(), "side sizes out of range");
    BipartiteGraph g(static_cast<int>(ns), static_cast<int>(np));
    while (reader.next(tokens)) {
        if (tokens.size() != 3 || tokens[0] != "e")
            throw ParseError(reader.line(), "expected 'e <i> <j>'");
        int i = parse_index(reader, tokens[1], g.ns(), "s vertex");
        int j = parse_index(reader, tokens[2], g.np(), "p vertex");
        if (g.has_edge(i, j)) throw ParseError(reader.line(), "duplicate edge");
        g.add_edge(i, j);
    }
    return g;
}

void write_graph(std::ostream& out, const BipartiteGraph& g) {
    out << "bipartite " << g.ns() << ' ' << g.np() << '\n';
    g.for_each_edge([&](int i, int j) { out << "e " << i << ' ' << j << '\n'; });
}

Labeling read_labeling(std::istream& in, int ns, int np) {
    LineReader reader(in);
    std::vector<std::string> tokens;
    if (!reader.next(tokens) || tokens.size() != 1 || tokens[0] != "labeling")
        throw ParseError(reader.line(), "expected 'labeling' header");
    Labeling l;
    l.s_labels.resize(ns);
    l.p_labels.resize(np);
    std::vector<bool> s_seen(ns, false), p_seen(np, false);
    while (reader.next(tokens)) {
        if (tokens.size() < 2 || (tokens[0] != "s" && tokens[0] != "p"))
            throw ParseError(reader.line(), "expected 's <i> <symbols...>' or 'p <j> <symbols...>'");
        bool s_side = tokens[0] == "s";
        int index = parse_index(reader, tokens[1], s_side ? ns : np,
                                s_side ? "s vertex" : "p vertex");
        std::vector<bool>& seen = s_side ? s_seen : p_seen;
        if (seen[index]) throw ParseError(reader.line(), "vertex labeled twice");
        seen[index] = true;
        Label label;
        for (std::size_t t = 2; t < tokens.size(); ++t) {
            long long sym = parse_int(reader, tokens[t]);
            if (sym < 0) throw ParseError(reader.line(), "symbols must be non-negative");
            label.push_back(static_cast<Symbol>(sym));
        }
        (s_side ? l.s_labels : l.p_labels)[index] = std::move(label);
    }
    for (int i = 0; i < ns; ++i)
        if (!s_seen[i])
            throw ParseError(reader.line(), "missing label for s vertex " + std::to_string(i));
    for (int j = 0; j < np; ++j)
        if (!p_seen[j])
            throw ParseError(reader.line(), "missing label for p vertex " + std::to_string(j));
    return l;
}

void write_labeling(std::ostream& out, const Labeling& l) {
    out << "labeling\n";
    for (std::size_t i = 0; i < l.s_labels.size(); ++i) {
        out << "s " << i;
        for (Symbol sym : l.s_labels[i]) out << ' ' << sym;
        out << '\n';
    }
    for (std::size_t j = 0; j < l.p_labels.size(); ++j) {
        out << "p " << j;
        for (Symbol sym : l.p_labels[j]) out << ' ' << sym;
        out << '\n';
    }
}

GridGraphSpec read_grid_graph(std::istream& in) {
    LineReader reader(in);
    std::vector<std::string> tokens;
    if (!reader.next(tokens) || tokens.size() != 1 || tokens[0] != "gridgraph")
        throw ParseError(reader.line(), "expected 'gridgraph' header");
    GridGraphSpec spec;
    std::set<std::pair<int, int>> seen;
    while (reader.next(tokens)) {
        if (tokens.size() != 3 || tokens[0] != "v")
            throw ParseError(reader.line(), "expected 'v <row> <col>'");
        long long r = parse_int(reader, tokens[1]), c = parse_int(reader, tokens[2]);
        if (r < 0 || c < 0 || r > 1'000'000 || c > 1'000'000)
            throw ParseError(reader.line(), "cell coordinates out of range");
        std::pair<int, int> cell{static_cast<int>(r), static_cast<int>(c)};
        if (!seen.insert(cell).second) throw ParseError(reader.line(), "duplicate cell");
        spec.cells.push_back(cell);
    }
    std::sort(spec.cells.begin(), spec.cells.end());
    return spec;
}

void write_grid_graph(std::ostream& out, const GridGraphSpec& spec) {
    out << "gridgraph\n";
    for (const auto& [r, c] : spec.cells) out << "v " << r << ' ' << c << '\n';
}

HubAssignment read_hub_assignment(std::istream& in, const BipartiteGraph& g) {
    LineReader reader(in);
    std::vector<std::string> tokens;
    HubAssignment h;
    while (reader.next(tokens)) {
        if (tokens.size() != 4 || tokens[0] != "w")
            throw ParseError(reader.line(), "expected 'w <i> <j> <level>'");
        int i = parse_index(reader, tokens[1], g.ns(), "s vertex");
        int j = parse_index(reader, tokens[2], g.np(), "p vertex");
        if (!g.has_edge(i, j)) throw ParseError(reader.line(), "assignment of a non-edge");
        long long level = parse_int(reader, tokens[3]);
        if (level < 1 || level > g.edge_count())
            throw ParseError(reader.line(), "level out of range: " + std::to_string(level));
        if (!h.level_of.emplace(std::pair{i, j}, static_cast<int>(level)).second)
            throw ParseError(reader.line(), "edge assigned twice");
        h.levels = std::max(h.levels, static_cast<int>(level));
    }
    return h;
}

void write_hub_assignment(std::ostream& out, const HubAssignment& h) {
    for (const auto& [edge, level] : h.level_of)
        out << "w " << edge.first << ' ' << edge.second << ' ' << level << '\n';
}

void write_cnf(std::ostream& out, const TwoSatFormula& formula,
               const std::vector<std::pair<int, int>>& variable_edges) {
    for (std::size_t v = 0; v < variable_edges.size(); ++v)
        out << "c var " << v + 1 << " = edge " << variable_edges[v].first << ' '
            << variable_edges[v].second << '\n';
    out << "p cnf " << formula.num_vars << ' ' << formula.clauses.size() << '\n';
    for (const TwoSatClause& clause : formula.clauses) {
        int a = (clause.a.var + 1) * (clause.a.positive ? 1 : -1);
        int b = (clause.b.var + 1) * (clause.b.positive ? 1 : -1);
        out << a << ' ' << b << " 0\n";
    }
}

}  // namespace overlap
