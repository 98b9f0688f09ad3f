#pragma once

// Canonical JSON (sorted keys, integers only, compact, one trailing newline)
// and the plain edge-list format.
//
//   graph     {"edges":[[u,v],...],"n":N}
//   coloring  {"colors":"rbrb..."}
//   quartet   {"i_blue":..,"i_red":..,"j_blue":..,"j_red":..}
//   instance  {"coloring":{..},"fibers":{..}?,"graph":{..},"provenance":[..],
//              "quartet":{..},"schema":"dualham.instance/1"}
//   edge list "n m" then m lines "u v"

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dualham/coloring.hpp"
#include "dualham/graph.hpp"
#include "dualham/lift.hpp"
#include "dualham/solver.hpp"

namespace dualham::io {

using json = nlohmann::json;

inline constexpr std::string_view kInstanceSchema = "dualham.instance/1";
inline constexpr std::string_view kSolveSchema = "dualham.solve/1";
inline constexpr std::string_view kCensusSchema = "dualham.census/1";

// Set on documents whose graph is a product G × T: fiber x holds flat ids
// [x * base_size, (x + 1) * base_size).
struct FiberLayout {
    int base_size = 0;
    int count = 0;

    friend bool operator==(const FiberLayout&, const FiberLayout&) = default;
};

struct InstanceDocument {
    Graph graph;
    TwoColoring coloring;
    Quartet quartet;
    json provenance = json::array();
    std::optional<FiberLayout> fibers;

    friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

// All parsers throw parse_error on malformed input.
json parse_json(std::string_view text);
std::string canonical(const json& value);

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& value);

json coloring_to_json(const TwoColoring& c);
TwoColoring coloring_from_json(const json& value);

json quartet_to_json(const Quartet& q);
Quartet quartet_from_json(const json& value);

json instance_to_json(const InstanceDocument& doc);
InstanceDocument instance_from_json(const json& value);

std::string graph_to_edge_list(const Graph& g);
Graph graph_from_edge_list(std::string_view text);

// JSON if the first non-blank character is '{', else edge list.
Graph graph_from_text(std::string_view text);

InstanceDocument document_from_seed(const SeedInstance& seed, json provenance,
                                    std::optional<FiberLayout> fibers = std::nullopt);

json solve_result_to_json(const SolveResult& result, bool include_timing);
json census_to_json(std::span<const CensusRow> rows, bool include_timing);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace dualham::io
