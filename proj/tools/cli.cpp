#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "overlap/bipartite_graph.hpp"
#include "overlap/chain.hpp"
#include "overlap/grids.hpp"
#include "overlap/hub.hpp"
#include "overlap/io.hpp"
#include "overlap/labeling.hpp"
#include "overlap/oracle.hpp"
#include "overlap/readability2.hpp"
#include "overlap/twosat.hpp"

namespace overlap {

namespace {

BipartiteGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_graph(in);
}

Labeling load_labeling(const std::string& path, int ns, int np) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_labeling(in, ns, np);
}

GridGraphSpec load_grid_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_grid_graph(in);
}

HubAssignment load_hub_assignment(const std::string& path, const BipartiteGraph& g) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_hub_assignment(in, g);
}

/// Writes through the fallback stream when path is empty, else to the file.
void emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& writer) {
    if (path.empty()) {
        writer(fallback);
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::invalid_argument("cannot write " + path);
    writer(file);
}

void emit_required(const std::string& path,
                   const std::function<void(std::ostream&)>& writer) {
    std::ofstream file(path);
    if (!file) throw std::invalid_argument("cannot write " + path);
    writer(file);
}

/// Formulas of all clause-built components merged into one, variables
/// offset per component and edges mapped to the reduced graph.
std::pair<TwoSatFormula, std::vector<std::pair<int, int>>> merged_formula(
    const Decision2& decision) {
    TwoSatFormula merged;
    std::vector<std::pair<int, int>> edges;
    for (const ComponentAnalysis& component : decision.components) {
        if (!component.clauses) continue;
        const ClauseBuild& build = *component.clauses;
        int offset = merged.num_vars;
        for (const auto& [u, v] : build.variable_edges)
            edges.emplace_back(component.s_map[u], component.p_map[v]);
        for (TwoSatClause clause : build.formula.clauses) {
            clause.a.var += offset;
            clause.b.var += offset;
            merged.clauses.push_back(clause);
        }
        merged.num_vars += build.formula.num_vars;
    }
    return {std::move(merged), std::move(edges)};
}

OracleBudget budget_with_steps(long long steps) {
    OracleBudget budget;
    if (steps > 0) budget.max_steps = steps;
    return budget;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tools for overlap labelings of bipartite graphs"};
    app.require_subcommand(1);
    std::function<int()> action;

    auto* gen = app.add_subcommand("gen", "write a graph or cell set to a file");
    gen->require_subcommand(1);
    struct {
        int n = 0;
        int m = 0;
        std::string output;
    } gen_args;

    auto* gen_chain = gen->add_subcommand("chain", "bipartite chain graph with n vertices per side");
    gen_chain->add_option("n", gen_args.n, "vertices per side")->required();
    gen_chain->add_option("-o,--output", gen_args.output, "output file (default stdout)");
    gen_chain->callback([&] {
        action = [&]() {
            BipartiteGraph g = chain_graph(gen_args.n);
            emit(gen_args.output, out, [&](std::ostream& s) { write_graph(s, g); });
            return 0;
        };
    });

    auto* gen_grid = gen->add_subcommand("grid", "m x n grid graph on cells, split by cell parity");
    gen_grid->add_option("m", gen_args.m, "rows")->required();
    gen_grid->add_option("n", gen_args.n, "columns")->required();
    gen_grid->add_option("-o,--output", gen_args.output, "output file (default stdout)");
    gen_grid->callback([&] {
        action = [&]() {
            CellEncoding encoding = grid(gen_args.m, gen_args.n);
            emit(gen_args.output, out, [&](std::ostream& s) { write_graph(s, encoding.graph); });
            return 0;
        };
    });

    auto* gen_torus = gen->add_subcommand("torus", "m x n toroidal grid graph, both dimensions even");
    gen_torus->add_option("m", gen_args.m, "rows")->required();
    gen_torus->add_option("n", gen_args.n, "columns")->required();
    gen_torus->add_option("-o,--output", gen_args.output, "output file (default stdout)");
    gen_torus->callback([&] {
        action = [&]() {
            CellEncoding encoding = toroidal_grid(gen_args.m, gen_args.n);
            emit(gen_args.output, out, [&](std::ostream& s) { write_graph(s, encoding.graph); });
            return 0;
        };
    });

    auto* gen_cells = gen->add_subcommand("cells", "full m x n rectangle as a grid graph cell file");
    gen_cells->add_option("m", gen_args.m, "rows")->required();
    gen_cells->add_option("n", gen_args.n, "columns")->required();
    gen_cells->add_option("-o,--output", gen_args.output, "output file (default stdout)");
    gen_cells->callback([&] {
        action = [&]() {
            if (gen_args.m < 1 || gen_args.n < 1)
                throw std::invalid_argument("cell rectangle needs positive dimensions");
            GridGraphSpec spec;
            for (int r = 0; r < gen_args.m; ++r)
                for (int c = 0; c < gen_args.n; ++c) spec.cells.emplace_back(r, c);
            emit(gen_args.output, out, [&](std::ostream& s) { write_grid_graph(s, spec); });
            return 0;
        };
    });

    auto* label = app.add_subcommand("label", "write a labeling for a generated graph");
    label->require_subcommand(1);
    struct {
        int n = 0;
        std::string output;
    } label_args;

    auto* label_chain = label->add_subcommand("chain", "labeling of the chain graph from gen chain n");
    label_chain->add_option("n", label_args.n, "vertices per side")->required();
    label_chain->add_option("-o,--output", label_args.output, "output file (default stdout)");
    label_chain->callback([&] {
        action = [&]() {
            Labeling l = chain_labeling(label_args.n);
            emit(label_args.output, out, [&](std::ostream& s) { write_labeling(s, l); });
            return 0;
        };
    });

    auto* label_torus = label->add_subcommand("torus", "length-3 labeling of the torus from gen torus 4n 4n");
    label_torus->add_option("n", label_args.n, "quarter side length")->required();
    label_torus->add_option("-o,--output", label_args.output, "output file (default stdout)");
    label_torus->callback([&] {
        action = [&]() {
            Labeling l = torus_labeling(label_args.n);
            emit(label_args.output, out, [&](std::ostream& s) { write_labeling(s, l); });
            return 0;
        };
    });

    auto* verify_cmd = app.add_subcommand("verify", "check a labeling against a graph");
    struct {
        std::string graph;
        std::string labeling;
    } verify_args;
    verify_cmd->add_option("graph", verify_args.graph, "graph file")->required();
    verify_cmd->add_option("labeling", verify_args.labeling, "labeling file")->required();
    verify_cmd->callback([&] {
        action = [&]() {
            BipartiteGraph g = load_graph(verify_args.graph);
            Labeling l = load_labeling(verify_args.labeling, g.ns(), g.np());
            VerificationReport report = verify(g, l);
            if (report.ok) {
                out << "ok\n";
                return 0;
            }
            for (const auto& [s, p] : report.missing) out << "missing " << s << ' ' << p << '\n';
            for (const auto& [s, p] : report.extra) out << "extra " << s << ' ' << p << '\n';
            return 1;
        };
    });

    auto* decide2 = app.add_subcommand("decide2", "decide readability <= 2 and certify yes answers");
    struct {
        std::string graph;
        std::string witness;
        std::string cnf;
    } decide2_args;
    decide2->add_option("graph", decide2_args.graph, "graph file")->required();
    decide2->add_option("--witness", decide2_args.witness,
                        "witness labeling file on yes (default <graph>.labeling)");
    decide2->add_option("--cnf", decide2_args.cnf, "dump the clause encoding in DIMACS format");
    decide2->callback([&] {
        action = [&]() {
            BipartiteGraph g = load_graph(decide2_args.graph);
            Decision2 decision = decide_readability_le2(g);
            if (!decide2_args.cnf.empty()) {
                auto [formula, edges] = merged_formula(decision);
                emit_required(decide2_args.cnf,
                              [&](std::ostream& s) { write_cnf(s, formula, edges); });
            }
            if (!decision.yes) {
                out << "no\n";
                return 1;
            }
            std::string witness_path = decide2_args.witness.empty()
                                           ? decide2_args.graph + ".labeling"
                                           : decide2_args.witness;
            emit_required(witness_path,
                          [&](std::ostream& s) { write_labeling(s, *decision.labeling); });
            out << "yes\n";
            return 0;
        };
    });

    auto* readability = app.add_subcommand("readability", "exact readability of restricted classes");
    readability->require_subcommand(1);
    struct {
        std::string cells;
        std::string witness;
        std::string graph;
    } readability_args;

    auto* readability_grid = readability->add_subcommand("gridgraph", "readability of an induced grid graph");
    readability_grid->add_option("cells", readability_args.cells, "cell file")->required();
    readability_grid->add_option("--witness", readability_args.witness,
                                 "witness labeling file (default <cells>.labeling)");
    readability_grid->add_option("--graph", readability_args.graph,
                                 "also write the encoded bipartite graph");
    readability_grid->callback([&] {
        action = [&]() {
            GridGraphSpec spec = load_grid_graph(readability_args.cells);
            GridDecision decision = grid_graph_readability(spec);
            if (!readability_args.graph.empty())
                emit_required(readability_args.graph, [&](std::ostream& s) {
                    write_graph(s, decision.encoding.graph);
                });
            std::string witness_path = readability_args.witness.empty()
                                           ? readability_args.cells + ".labeling"
                                           : readability_args.witness;
            emit_required(witness_path,
                          [&](std::ostream& s) { write_labeling(s, decision.witness); });
            out << decision.value << '\n';
            return 0;
        };
    });

    auto* seq = app.add_subcommand("seq", "forward-matching sequence S_r or its length profile B_r");
    struct {
        std::string kind;
        int round = 0;
    } seq_args;
    seq->add_option("kind", seq_args.kind, "S or B")->required();
    seq->add_option("r", seq_args.round, "round, at least 2")->required();
    seq->callback([&] {
        action = [&]() {
            if (seq_args.kind == "S") {
                FMSequence s = build_fm_sequence(seq_args.round);
                for (const Label& string : s.strings) {
                    for (size_t i = 0; i < string.size(); ++i)
                        out << (i ? " " : "") << string[i];
                    out << '\n';
                }
                return 0;
            }
            if (seq_args.kind == "B") {
                LengthSequence b = build_length_sequence(seq_args.round);
                for (int length : b.lengths) out << length << '\n';
                return 0;
            }
            throw std::invalid_argument("sequence kind must be S or B");
        };
    });

    auto* totient_cmd = app.add_subcommand("totient", "Euler totients and their running sum");
    struct {
        int limit = 0;
    } totient_args;
    totient_cmd->add_option("r", totient_args.limit, "upper bound, at least 1")->required();
    totient_cmd->callback([&] {
        action = [&]() {
            std::vector<long long> phi = totient_sieve(totient_args.limit);
            long long sum = 0;
            for (int k = 1; k <= totient_args.limit; ++k) {
                sum += phi[k];
                out << k << ' ' << phi[k] << ' ' << sum << '\n';
            }
            return 0;
        };
    });

    auto* hub = app.add_subcommand("hub", "hierarchical union-of-bicliques decompositions");
    hub->require_subcommand(1);
    struct {
        std::string graph;
        std::string assignment;
        std::string output;
        int max_k = 0;
        long long steps = 0;
    } hub_args;

    auto* hub_min = hub->add_subcommand("min", "smallest decomposition by exhaustive search");
    hub_min->add_option("graph", hub_args.graph, "graph file")->required();
    hub_min->add_option("--max-k", hub_args.max_k, "largest level count to try");
    hub_min->add_option("--steps", hub_args.steps, "search step budget");
    hub_min->add_option("-o,--output", hub_args.output, "assignment file (default stdout)");
    hub_min->callback([&] {
        action = [&]() {
            BipartiteGraph g = load_graph(hub_args.graph);
            OracleBudget budget = budget_with_steps(hub_args.steps);
            if (hub_args.max_k > 0) budget.max_levels = hub_args.max_k;
            MinHubResult result = min_hub_bruteforce(g, budget);
            out << result.levels << '\n';
            emit(hub_args.output, out,
                 [&](std::ostream& s) { write_hub_assignment(s, result.witness); });
            return 0;
        };
    });

    auto* hub_check = hub->add_subcommand("check", "validate an edge-to-level assignment");
    hub_check->add_option("graph", hub_args.graph, "graph file")->required();
    hub_check->add_option("assignment", hub_args.assignment, "assignment file")->required();
    hub_check->callback([&] {
        action = [&]() {
            BipartiteGraph g = load_graph(hub_args.graph);
            HubAssignment h = load_hub_assignment(hub_args.assignment, g);
            if (is_hub_decomposition(g, h)) {
                out << "valid\n";
                return 0;
            }
            out << "invalid\n";
            return 1;
        };
    });

    auto* oracle = app.add_subcommand("oracle", "exhaustive searches for cross-checking");
    oracle->require_subcommand(1);
    struct {
        std::string graph;
        std::string output;
        int len = 0;
        int alphabet = 0;
        long long steps = 0;
    } oracle_args;

    auto* oracle_matching = oracle->add_subcommand("matching", "feasible matching of a twin-free graph");
    oracle_matching->add_option("graph", oracle_args.graph, "graph file")->required();
    oracle_matching->add_option("--steps", oracle_args.steps, "search step budget");
    oracle_matching->callback([&] {
        action = [&]() {
            BipartiteGraph g = load_graph(oracle_args.graph);
            std::optional<Matching> m =
                feasible_matching_bruteforce(g, budget_with_steps(oracle_args.steps));
            if (!m) {
                out << "none\n";
                return 1;
            }
            out << "feasible\n";
            for (const auto& [s, p] : m->edges) out << "e " << s << ' ' << p << '\n';
            return 0;
        };
    });

    auto* oracle_search = oracle->add_subcommand("label-search", "smallest labeling within bounds");
    oracle_search->add_option("graph", oracle_args.graph, "graph file")->required();
    oracle_search->add_option("--len", oracle_args.len, "largest label length")->required();
    oracle_search->add_option("--alphabet", oracle_args.alphabet, "alphabet size")->required();
    oracle_search->add_option("--steps", oracle_args.steps, "search step budget");
    oracle_search->add_option("-o,--output", oracle_args.output, "labeling file (default stdout)");
    oracle_search->callback([&] {
        action = [&]() {
            BipartiteGraph g = load_graph(oracle_args.graph);
            std::optional<Labeling> l = bounded_labeling_search(
                g, oracle_args.len, oracle_args.alphabet, budget_with_steps(oracle_args.steps));
            if (!l) {
                out << "none\n";
                return 1;
            }
            emit(oracle_args.output, out, [&](std::ostream& s) { write_labeling(s, *l); });
            return 0;
        };
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
        return action ? action() : 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace overlap
