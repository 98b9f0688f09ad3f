#include "dualham/io.hpp"

#include <fstream>
#include <sstream>

#include "dualham/errors.hpp"

namespace dualham::io {

namespace {

const json& field(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw parse_error(std::string("missing field \"") + key + "\"");
    return *it;
}

int integer(const json& value, const char* what) {
    if (!value.is_number_integer()) throw parse_error(std::string(what) + ": expected an integer");
    auto v = value.get<long long>();
    if (v < -(1LL << 30) || v > (1LL << 30)) throw parse_error(std::string(what) + ": integer out of range");
    return static_cast<int>(v);
}

void require_object(const json& value, const char* what, std::initializer_list<std::string_view> allowed) {
    if (!value.is_object()) throw parse_error(std::string(what) + ": expected an object");
    for (const auto& [key, _] : value.items()) {
        bool known = false;
        for (auto a : allowed) known = known || key == a;
        if (!known) throw parse_error(std::string(what) + ": unknown field \"" + key + "\"");
    }
}

}  // namespace

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
}

std::string canonical(const json& value) { return value.dump() + "\n"; }

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& value) {
    require_object(value, "graph", {"n", "edges"});
    int n = integer(field(value, "n"), "graph.n");
    if (n < 0) throw parse_error("graph.n: negative");
    const auto& edges = field(value, "edges");
    if (!edges.is_array()) throw parse_error("graph.edges: expected an array");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2) throw parse_error("graph.edges: each edge must be [u, v]");
        pairs.emplace_back(integer(e[0], "edge endpoint"), integer(e[1], "edge endpoint"));
    }
    try {
        return Graph(n, std::span<const std::pair<Vertex, Vertex>>(pairs));
    } catch (const invalid_input& e) {
        throw parse_error(std::string("graph: ") + e.what());
    }
}

json coloring_to_json(const TwoColoring& c) { return {{"colors", c.to_string()}}; }

TwoColoring coloring_from_json(const json& value) {
    require_object(value, "coloring", {"colors"});
    const auto& colors = field(value, "colors");
    if (!colors.is_string()) throw parse_error("coloring.colors: expected a string");
    return TwoColoring::from_string(colors.get<std::string>());
}

json quartet_to_json(const Quartet& q) {
    return {{"i_red", q.i_red}, {"i_blue", q.i_blue}, {"j_red", q.j_red}, {"j_blue", q.j_blue}};
}

Quartet quartet_from_json(const json& value) {
    require_object(value, "quartet", {"i_red", "i_blue", "j_red", "j_blue"});
    return {integer(field(value, "i_red"), "quartet.i_red"), integer(field(value, "i_blue"), "quartet.i_blue"),
            integer(field(value, "j_red"), "quartet.j_red"), integer(field(value, "j_blue"), "quartet.j_blue")};
}

json instance_to_json(const InstanceDocument& doc) {
    json out = {
        {"schema", kInstanceSchema},
        {"graph", graph_to_json(doc.graph)},
        {"coloring", coloring_to_json(doc.coloring)},
        {"quartet", quartet_to_json(doc.quartet)},
        {"provenance", doc.provenance},
    };
    if (doc.fibers) out["fibers"] = {{"base_size", doc.fibers->base_size}, {"count", doc.fibers->count}};
    return out;
}

InstanceDocument instance_from_json(const json& value) {
    require_object(value, "instance", {"schema", "graph", "coloring", "quartet", "provenance", "fibers"});
    const auto& schema = field(value, "schema");
    if (!schema.is_string() || schema.get<std::string>() != kInstanceSchema) {
        throw parse_error("instance: unsupported schema (expected " + std::string(kInstanceSchema) + ")");
    }
    InstanceDocument doc;
    doc.graph = graph_from_json(field(value, "graph"));
    doc.coloring = coloring_from_json(field(value, "coloring"));
    if (doc.coloring.size() != doc.graph.vertex_count()) {
        throw parse_error("instance: coloring length does not match the vertex count");
    }
    doc.quartet = quartet_from_json(field(value, "quartet"));
    if (!doc.quartet.in_range(doc.graph.vertex_count())) throw parse_error("instance: quartet vertex out of range");
    doc.provenance = field(value, "provenance");
    if (!doc.provenance.is_array()) throw parse_error("instance.provenance: expected an array");
    if (auto it = value.find("fibers"); it != value.end()) {
        require_object(*it, "fibers", {"base_size", "count"});
        FiberLayout f{integer(field(*it, "base_size"), "fibers.base_size"), integer(field(*it, "count"), "fibers.count")};
        if (f.base_size < 1 || f.count < 1 || f.base_size * f.count != doc.graph.vertex_count()) {
            throw parse_error("instance.fibers: layout does not match the vertex count");
        }
        doc.fibers = f;
    }
    return doc;
}

std::string graph_to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph graph_from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = 0;
    long long m = 0;
    if (!(in >> n >> m) || n < 0 || m < 0) throw parse_error("edge list: bad header, expected \"n m\"");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (long long k = 0; k < m; ++k) {
        long long u = 0;
        long long v = 0;
        if (!(in >> u >> v)) throw parse_error("edge list: expected " + std::to_string(m) + " edges");
        pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    std::string trailing;
    if (in >> trailing) throw parse_error("edge list: trailing data");
    try {
        return Graph(static_cast<int>(n), std::span<const std::pair<Vertex, Vertex>>(pairs));
    } catch (const invalid_input& e) {
        throw parse_error(std::string("edge list: ") + e.what());
    }
}

Graph graph_from_text(std::string_view text) {
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string_view::npos && text[pos] == '{') return graph_from_json(parse_json(text));
    return graph_from_edge_list(text);
}

InstanceDocument document_from_seed(const SeedInstance& seed, json provenance, std::optional<FiberLayout> fibers) {
    return {seed.graph(), seed.coloring(), seed.quartet(), std::move(provenance), fibers};
}

json solve_result_to_json(const SolveResult& result, bool include_timing) {
    json out = {
        {"schema", kSolveSchema},
        {"status", status_name(result.status)},
        {"stats", {{"nodes", result.stats.nodes}, {"colorings_enumerated", result.stats.colorings_enumerated}}},
    };
    if (include_timing) {
        out["stats"]["elapsed_us"] =
            std::chrono::duration_cast<std::chrono::microseconds>(result.stats.elapsed).count();
    }
    if (result.coloring) {
        json witness = {{"coloring", coloring_to_json(*result.coloring)}};
        if (result.quartet) witness["quartet"] = quartet_to_json(*result.quartet);
        out["witness"] = std::move(witness);
    }
    return out;
}

json census_to_json(std::span<const CensusRow> rows, bool include_timing) {
    json list = json::array();
    for (const auto& row : rows) {
        json r = {
            {"id", row.id},
            {"n", row.vertex_count},
            {"m", row.edge_count},
            {"density_violation", row.density_violation ? json(*row.density_violation) : json(nullptr)},
            {"dual_hamiltonian", solve_result_to_json(row.dual, include_timing)},
            {"quartet_coloring", solve_result_to_json(row.quartet, include_timing)},
        };
        r["dual_hamiltonian"].erase("schema");
        r["quartet_coloring"].erase("schema");
        list.push_back(std::move(r));
    }
    return {{"schema", kCensusSchema}, {"rows", std::move(list)}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace dualham::io
