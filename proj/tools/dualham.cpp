// dualham: generate, verify, lift, solve, census and draw hamiltonian
// colorings with quartets.
//
// Exit codes: 0 success / decided, 1 verification failure, 2 budget abort,
// 3 malformed input, 64 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dualham/coloring.hpp"
#include "dualham/dot.hpp"
#include "dualham/errors.hpp"
#include "dualham/generators.hpp"
#include "dualham/io.hpp"
#include "dualham/lift.hpp"
#include "dualham/solver.hpp"

namespace {

using namespace dualham;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitBudget = 2;
constexpr int kExitParse = 3;
constexpr int kExitUsage = 64;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        io::write_file(out_path, content);
    }
}

int parse_int(const std::string& s, const char* what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw usage_error(std::string(what) + ": expected an integer, got \"" + s + "\"");
    return value;
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::vector<std::string> params;
    std::string out;
    bool edge_list = false;
};

int cmd_gen(const GenArgs& a) {
    auto need = [&](std::size_t count) {
        if (a.params.size() != count) {
            throw usage_error("gen " + a.family + ": expected " + std::to_string(count) + " parameter(s)");
        }
    };
    auto graph_out = [&](const Graph& g) {
        emit(a.out, a.edge_list ? io::graph_to_edge_list(g) : io::canonical(io::graph_to_json(g)));
        return kExitOk;
    };
    auto seed_out = [&](const SeedInstance& seed, json provenance) {
        if (a.edge_list) throw usage_error("gen " + a.family + ": seeds are written as instance JSON only");
        emit(a.out, io::canonical(io::instance_to_json(io::document_from_seed(seed, json::array({provenance})))));
        return kExitOk;
    };

    if (a.family == "hypercube") {
        need(1);
        return graph_out(hypercube(parse_int(a.params[0], "n")));
    }
    if (a.family == "grid") {
        if (a.params.empty()) throw usage_error("gen grid: expected at least one dimension");
        GridSpec spec;
        for (const auto& p : a.params) spec.dims.push_back(parse_int(p, "dimension"));
        return graph_out(grid(spec));
    }
    if (a.family == "path-tree") {
        need(1);
        return graph_out(path(parse_int(a.params[0], "n")).graph());
    }
    if (a.family == "counterexample") {
        need(0);
        return graph_out(counterexample_graph());
    }
    if (a.family == "seed-ladder") {
        need(1);
        int n = parse_int(a.params[0], "n");
        json prov = {{"generator", "seed-ladder"}, {"n", n}, {"drawing", "ladder"}};
        return seed_out(seed_cube_ladder(n), prov);
    }
    if (a.family == "seed-grid") {
        need(2);
        int m = parse_int(a.params[0], "m");
        int n = parse_int(a.params[1], "n");
        json prov = {{"generator", "seed-grid"}, {"m", m}, {"n", n}};
        if (m == 4 && n == 5) prov["drawing"] = "grid-4x5";
        if (m == 4 && n == 6) prov["drawing"] = "grid-4x6";
        return seed_out(seed_grid(m, n), prov);
    }
    throw usage_error("gen: unknown family \"" + a.family +
                      "\" (hypercube, grid, path-tree, counterexample, seed-ladder, seed-grid)");
}

// ---- verify ----------------------------------------------------------------

io::InstanceDocument load_instance(const std::string& path) {
    return io::instance_from_json(io::parse_json(io::read_file(path)));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string list_vertices(const VertexList& vs) {
    std::string s = "{";
    for (std::size_t k = 0; k < vs.size(); ++k) s += (k ? "," : "") + std::to_string(vs[k]);
    return s + "}";
}

int cmd_verify(const std::string& path, const std::string& out_path) {
    auto doc = load_instance(path);
    const auto& g = doc.graph;
    const auto& c = doc.coloring;
    const auto& q = doc.quartet;
    std::ostringstream out;
    std::vector<std::string> failed;
    auto check = [&](const std::string& name, bool ok, const std::string& detail = {}) {
        out << name << ": " << yes_no(ok);
        if (!detail.empty()) out << " (" << detail << ")";
        out << "\n";
        if (!ok) failed.push_back(name);
        return ok;
    };

    out << "vertices: " << g.vertex_count() << "\nedges: " << g.edge_count() << "\n";
    if (check("connected", is_connected(g))) {
        bool red_tree = class_induces_tree(g, c, Color::red);
        bool blue_tree = class_induces_tree(g, c, Color::blue);
        bool ham = check("hamiltonian coloring", is_hamiltonian_coloring(g, c),
                         "red tree: " + yes_no(red_tree) + ", blue tree: " + yes_no(blue_tree));
        auto bond = bichromatic_edges(g, c);
        const int expected = g.edge_count() - g.vertex_count() + 2;
        check("bond size", static_cast<int>(bond.size()) == expected,
              std::to_string(bond.size()) + " bichromatic, expected " + std::to_string(expected));
        check("hamiltonian bond", is_hamiltonian_bond(g, bond));
        check("jaeger criterion", jaeger_check(g, bond));
        if (check("quartet structure", q.distinct(),
                  q.distinct() ? "" : "I and J must be four distinct vertices")) {
            if (ham) {
                auto report = is_quartet(g, c, q);
                check("Q1", report.q1, "i_red, j_red red; i_blue, j_blue blue");
                check("Q2", report.q2, "flipping I keeps the coloring hamiltonian");
                check("Q3", report.q3, "flipping J splits each class into an I-tree and a J-tree");
                for (const auto& split : *report.q3_witness) {
                    out << "  " << color_name(split.color) << " class of C delta J: "
                        << (split.forest ? "forest" : "not a forest") << ", " << split.components.size()
                        << " component(s)\n";
                    for (const auto& comp : split.components) {
                        out << "    " << list_vertices(comp.vertices) << " meets I: " << yes_no(comp.meets_i())
                            << ", meets J: " << yes_no(comp.meets_j()) << "\n";
                    }
                }
                if (report.readings_diverge) check("Q3 readings agree", false);
            } else {
                out << "Q1-Q3: skipped (coloring is not hamiltonian)\n";
                failed.push_back("quartet");
            }
        }
    }
    if (failed.empty()) {
        out << "result: PASS\n";
    } else {
        out << "result: FAIL (";
        for (std::size_t k = 0; k < failed.size(); ++k) out << (k ? ", " : "") << failed[k];
        out << ")\n";
    }
    emit(out_path, out.str());
    return failed.empty() ? kExitOk : kExitVerify;
}

// ---- lift ------------------------------------------------------------------

struct LiftArgs {
    std::string instance;
    std::string tree;
    std::optional<int> r;
    std::optional<int> l;
    std::string order = "min-max";
    std::string out;
};

int cmd_lift(const LiftArgs& a) {
    if (a.r && a.l && *a.r == *a.l) throw usage_error("lift: r and l must be different leaves");
    auto doc = load_instance(a.instance);
    Graph tree = io::graph_from_text(io::read_file(a.tree));
    if (!is_tree(tree)) {
        std::cerr << "lift: second factor is not a tree\n";
        return kExitVerify;
    }
    auto [r0, l0] = default_leaves(tree, a.order == "max-min" ? LeafOrder::max_min : LeafOrder::min_max);
    const Vertex r = a.r.value_or(r0);
    const Vertex l = a.l.value_or(l0);
    if (tree.vertex_count() > 1 && r == l) throw usage_error("lift: r and l must be different leaves");

    SeedInstance seed = SeedInstance::verified(doc.graph, doc.coloring, doc.quartet);
    auto result = lift(seed, tree, r, l);

    json provenance = doc.provenance;
    provenance.push_back({{"step", "lift"}, {"tree", io::graph_to_json(tree)}, {"r", r}, {"l", l}});
    auto lifted = io::document_from_seed(result.instance, std::move(provenance),
                                         io::FiberLayout{result.index.g_size(), result.index.h_size()});
    emit(a.out, io::canonical(io::instance_to_json(lifted)));
    return kExitOk;
}

// ---- solve / census --------------------------------------------------------

struct SolveArgs {
    std::string graph;
    bool quartet = false;
    std::optional<long long> budget_ms;
    std::optional<long long> budget_nodes;
    int threads = 1;
    bool timing = false;
    std::string out;
};

SolverOptions solver_options(std::optional<long long> ms, std::optional<long long> nodes, int threads) {
    SolverOptions options;
    options.vertex_cap = vertex_cap_from_env();
    if (ms) options.budget.wall = std::chrono::milliseconds(*ms);
    if (nodes) options.budget.nodes = static_cast<std::uint64_t>(*nodes);
    options.threads = threads;
    return options;
}

void require_searchable(const Graph& g, const SolverOptions& options) {
    if (!is_connected(g)) throw usage_error("graph is disconnected");
    if (g.vertex_count() > kMaxSearchVertices) {
        throw usage_error("graph has more than " + std::to_string(kMaxSearchVertices) + " vertices");
    }
    if (g.vertex_count() > options.vertex_cap && !options.budget.limited()) {
        throw usage_error(std::to_string(g.vertex_count()) + " vertices exceeds the solver cap " +
                          std::to_string(options.vertex_cap) + "; pass --budget-ms or --budget-nodes");
    }
}

int cmd_solve(const SolveArgs& a) {
    Graph g = io::graph_from_text(io::read_file(a.graph));
    auto options = solver_options(a.budget_ms, a.budget_nodes, a.threads);
    require_searchable(g, options);
    SolveResult result = a.quartet ? find_quartet_coloring(g, options) : is_dual_hamiltonian(g, options);
    emit(a.out, io::canonical(io::solve_result_to_json(result, a.timing)));
    return result.status == SolveStatus::aborted_budget ? kExitBudget : kExitOk;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

// Items separated by ',': grid:MxN[xK...], hypercube:N, complete:N, cycle:N,
// path:N, counterexample, file:PATH.
std::vector<NamedGraph> parse_census_spec(const std::string& spec) {
    std::vector<NamedGraph> out;
    for (const auto& item : split(spec, ',')) {
        if (item.empty()) continue;
        auto colon = item.find(':');
        std::string kind = item.substr(0, colon);
        std::string arg = colon == std::string::npos ? "" : item.substr(colon + 1);
        if (kind == "grid") {
            GridSpec gs;
            for (const auto& d : split(arg, 'x')) gs.dims.push_back(parse_int(d, "grid dimension"));
            out.push_back({item, grid(gs)});
        } else if (kind == "hypercube") {
            out.push_back({item, hypercube(parse_int(arg, "hypercube"))});
        } else if (kind == "complete") {
            out.push_back({item, complete_graph(parse_int(arg, "complete"))});
        } else if (kind == "cycle") {
            out.push_back({item, cycle_graph(parse_int(arg, "cycle"))});
        } else if (kind == "path") {
            out.push_back({item, path(parse_int(arg, "path")).graph()});
        } else if (kind == "counterexample") {
            out.push_back({item, counterexample_graph()});
        } else if (kind == "file") {
            out.push_back({item, io::graph_from_text(io::read_file(arg))});
        } else {
            throw usage_error("census: unknown item \"" + item + "\"");
        }
    }
    if (out.empty()) throw usage_error("census: empty spec");
    return out;
}

struct CensusArgs {
    std::string spec;
    std::optional<long long> budget_ms;
    std::optional<long long> budget_nodes;
    bool timing = false;
    std::string out;
};

int cmd_census(const CensusArgs& a) {
    auto graphs = parse_census_spec(a.spec);
    auto options = solver_options(a.budget_ms, a.budget_nodes, 1);
    for (const auto& ng : graphs) require_searchable(ng.graph, options);
    auto rows = census(graphs, options);
    emit(a.out, io::canonical(io::census_to_json(rows, a.timing)));
    for (const auto& row : rows) {
        if (row.dual.status == SolveStatus::aborted_budget || row.quartet.status == SolveStatus::aborted_budget) {
            return kExitBudget;
        }
    }
    return kExitOk;
}

// ---- export-dot ------------------------------------------------------------

int cmd_export_dot(const std::string& path, const DotStyle& style, const std::string& out_path) {
    emit(out_path, export_dot(load_instance(path), style));
    return kExitOk;
}

constexpr const char* kFooter =
    "\nSchemas: dualham.instance/1 (instance documents), dualham.solve/1, dualham.census/1;\n"
    "graph files are {\"n\":N,\"edges\":[[u,v],...]} or an edge list \"n m\" + m lines \"u v\".\n"
    "Environment: DUALHAM_SOLVER_CAP overrides the solver vertex cap (default 28).\n"
    "Exit codes: 0 ok/decided, 1 verification failure, 2 budget abort, 3 malformed input, 64 usage.";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian colorings with quartets: construction and verification"};
    app.footer(kFooter);
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Generate a graph or a verified seed instance");
    gen->add_option("family", gen_args.family,
                    "hypercube N | grid D1 D2 ... | path-tree N | counterexample | seed-ladder N | seed-grid M N")
        ->required();
    gen->add_option("params", gen_args.params, "Family parameters");
    gen->add_option("-o,--out", gen_args.out, "Output file (default stdout)");
    gen->add_flag("--edge-list", gen_args.edge_list, "Write graphs as an edge list instead of JSON");

    std::string verify_path;
    std::string verify_out;
    auto* verify = app.add_subcommand("verify", "Check an instance document condition by condition");
    verify->add_option("instance", verify_path, "Instance JSON")->required();
    verify->add_option("-o,--out", verify_out, "Report file (default stdout)");

    LiftArgs lift_args;
    int lift_r = -1;
    int lift_l = -1;
    auto* lift_cmd = app.add_subcommand("lift", "Lift an instance over a tree");
    lift_cmd->add_option("instance", lift_args.instance, "Instance JSON")->required();
    lift_cmd->add_option("tree", lift_args.tree, "Tree graph (JSON or edge list)")->required();
    auto* r_opt = lift_cmd->add_option("--r", lift_r, "Root leaf r");
    auto* l_opt = lift_cmd->add_option("--l", lift_l, "Second leaf l");
    lift_cmd->add_option("--seed-order", lift_args.order, "Default (r, l) choice: min-max or max-min")
        ->check(CLI::IsMember({"min-max", "max-min"}));
    lift_cmd->add_option("-o,--out", lift_args.out, "Output file (default stdout)");

    SolveArgs solve_args;
    long long solve_ms = 0;
    long long solve_nodes = 0;
    auto* solve = app.add_subcommand("solve", "Decide dual-hamiltonicity by exhaustive search");
    solve->add_option("graph", solve_args.graph, "Graph (JSON or edge list)")->required();
    solve->add_flag("--quartet", solve_args.quartet, "Search for a hamiltonian coloring with a quartet");
    auto* solve_ms_opt = solve->add_option("--budget-ms", solve_ms, "Wall-clock budget")->check(CLI::PositiveNumber);
    auto* solve_nodes_opt =
        solve->add_option("--budget-nodes", solve_nodes, "Search node budget")->check(CLI::PositiveNumber);
    solve->add_option("--threads", solve_args.threads, "Worker threads for enumeration")->check(CLI::Range(1, 256));
    solve->add_flag("--timing", solve_args.timing, "Include elapsed time (output is then not reproducible)");
    solve->add_option("-o,--out", solve_args.out, "Output file (default stdout)");

    CensusArgs census_args;
    long long census_ms = 0;
    long long census_nodes = 0;
    auto* census_cmd = app.add_subcommand("census", "Solve a list of graphs");
    census_cmd
        ->add_option("spec", census_args.spec,
                     "Comma-separated: grid:MxN, hypercube:N, complete:N, cycle:N, path:N, counterexample, "
                     "file:PATH")
        ->required();
    auto* census_ms_opt = census_cmd->add_option("--budget-ms", census_ms, "Per-search wall-clock budget")
                              ->check(CLI::PositiveNumber);
    auto* census_nodes_opt = census_cmd->add_option("--budget-nodes", census_nodes, "Per-search node budget")
                                 ->check(CLI::PositiveNumber);
    census_cmd->add_flag("--timing", census_args.timing, "Include elapsed times");
    census_cmd->add_option("-o,--out", census_args.out, "Output file (default stdout)");

    std::string dot_path;
    std::string dot_out;
    bool no_clusters = false;
    bool no_labels = false;
    auto* dot = app.add_subcommand("export-dot", "Render an instance as Graphviz DOT");
    dot->add_option("instance", dot_path, "Instance JSON")->required();
    dot->add_flag("--no-clusters", no_clusters, "Do not group product fibers into clusters");
    dot->add_flag("--no-labels", no_labels, "Do not label quartet vertices");
    dot->add_option("-o,--out", dot_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_args);
        if (verify->parsed()) return cmd_verify(verify_path, verify_out);
        if (lift_cmd->parsed()) {
            if (r_opt->count() > 0) lift_args.r = lift_r;
            if (l_opt->count() > 0) lift_args.l = lift_l;
            return cmd_lift(lift_args);
        }
        if (solve->parsed()) {
            if (solve_ms_opt->count() > 0) solve_args.budget_ms = solve_ms;
            if (solve_nodes_opt->count() > 0) solve_args.budget_nodes = solve_nodes;
            return cmd_solve(solve_args);
        }
        if (census_cmd->parsed()) {
            if (census_ms_opt->count() > 0) census_args.budget_ms = census_ms;
            if (census_nodes_opt->count() > 0) census_args.budget_nodes = census_nodes;
            return cmd_census(census_args);
        }
        if (dot->parsed()) return cmd_export_dot(dot_path, {!no_clusters, !no_labels}, dot_out);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const verification_failure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerify;
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerify;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerify;
    }
    return kExitUsage;
}
