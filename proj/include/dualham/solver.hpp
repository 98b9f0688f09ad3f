#pragma once

// Exact search used as an independent oracle for the constructive side.
//
// enumerate_hamiltonian_colorings backtracks over vertices, keeping one
// undoable union-find per color. A partial assignment is dropped as soon as a
// color class contains a cycle, or a class has a component with no uncolored
// neighbor while the class has other components (that component can never be
// joined to the rest). Vertex 0 is always red, so every hamiltonian coloring
// is found exactly once up to a global color swap.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dualham/coloring.hpp"
#include "dualham/graph.hpp"

namespace dualham {

inline constexpr int kDefaultVertexCap = 28;
// Hard limit of the bitset representation (two 64-bit words).
inline constexpr int kMaxSearchVertices = 128;
inline constexpr int kDefaultSubsetCap = 16;

// DUALHAM_SOLVER_CAP if set to a positive integer, else kDefaultVertexCap.
int vertex_cap_from_env();

enum class SolveStatus { found, none_exhaustive, aborted_budget };
std::string_view status_name(SolveStatus s);

struct Budget {
    std::optional<std::chrono::milliseconds> wall;
    std::optional<std::uint64_t> nodes;

    bool limited() const { return wall.has_value() || nodes.has_value(); }
};

struct SolverOptions {
    // Graphs above this size are refused unless a budget is set.
    int vertex_cap = kDefaultVertexCap;
    Budget budget;
    // Workers for enumerate_hamiltonian_colorings; results do not depend on it.
    int threads = 1;
};

struct SearchStats {
    std::uint64_t nodes = 0;                 // partial assignments visited
    std::uint64_t colorings_enumerated = 0;  // complete assignments reached
    std::chrono::nanoseconds elapsed{0};
};

struct Enumeration {
    bool complete = true;  // false: the budget ran out first
    // Hamiltonian colorings with vertex 0 red, sorted.
    std::vector<TwoColoring> colorings;
    SearchStats stats;
};

struct SolveResult {
    SolveStatus status = SolveStatus::none_exhaustive;
    std::optional<TwoColoring> coloring;
    std::optional<Quartet> quartet;
    SearchStats stats;
};

// Throws invalid_input if g is disconnected, or larger than the cap without a
// budget, or larger than kMaxSearchVertices.
Enumeration enumerate_hamiltonian_colorings(const Graph& g, const SolverOptions& options = {});

// First hamiltonian coloring in search order, or an exhaustion proof.
SolveResult is_dual_hamiltonian(const Graph& g, const SolverOptions& options = {});

// First quartet in (i_red, i_blue, j_red, j_blue) order, or none after all
// candidates. Throws invalid_input if c is not hamiltonian.
std::optional<Quartet> find_quartet(const Graph& g, const TwoColoring& c);

// First hamiltonian coloring (vertex 0 red, sorted order) that has a quartet.
SolveResult find_quartet_coloring(const Graph& g, const SolverOptions& options = {});

// An induced subgraph H with |H| >= 2 and 4|E(H)| > 4|H| - 8 + |H|^2, which
// rules out a hamiltonian coloring. The whole graph is always checked; all
// subsets are checked when |g| <= subset_cap. Returns a smallest violating
// set (ties broken lexicographically).
std::optional<VertexList> density_check(const Graph& g, int subset_cap = kDefaultSubsetCap);

struct NamedGraph {
    std::string id;
    Graph graph;
};

struct CensusRow {
    std::string id;
    int vertex_count = 0;
    int edge_count = 0;
    std::optional<VertexList> density_violation;
    SolveResult dual;
    SolveResult quartet;
};

std::vector<CensusRow> census(std::span<const NamedGraph> graphs, const SolverOptions& options = {});

}  // namespace dualham
