#pragma once

// Two-colorings, hamiltonian colorings and bonds, and the quartet predicate.
//
// A 2-coloring C is hamiltonian when both color classes are nonempty and each
// induces a tree. Its bichromatic edges then form a bond of size
// |E| - |V| + 2; jaeger_check is that criterion stated on edge sets.
//
// A quartet of a hamiltonian coloring C is a pair of disjoint vertex pairs
// I = {i_red, i_blue}, J = {j_red, j_blue} such that
//   Q1  each pair has one vertex of each color,
//   Q2  C with I's colors swapped is hamiltonian,
//   Q3  with J's colors swapped, each color class induces a forest of exactly
//       two components, one meeting I and not J, the other meeting J and not I.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dualham/graph.hpp"

namespace dualham {

enum class Color : std::uint8_t { red = 0, blue = 1 };

constexpr Color opposite(Color c) { return c == Color::red ? Color::blue : Color::red; }
constexpr char color_char(Color c) { return c == Color::red ? 'r' : 'b'; }
std::string_view color_name(Color c);

class TwoColoring {
public:
    TwoColoring() = default;
    explicit TwoColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}

    static TwoColoring uniform(int n, Color c) { return TwoColoring(std::vector<Color>(n, c)); }
    // 'r' / 'b' per vertex. Throws parse_error on any other character.
    static TwoColoring from_string(std::string_view s);
    std::string to_string() const;

    int size() const { return static_cast<int>(colors_.size()); }
    Color operator[](Vertex v) const { return colors_[v]; }
    const std::vector<Color>& colors() const { return colors_; }

    friend bool operator==(const TwoColoring&, const TwoColoring&) = default;
    friend auto operator<=>(const TwoColoring&, const TwoColoring&) = default;

private:
    std::vector<Color> colors_;
};

struct Quartet {
    Vertex i_red = 0;
    Vertex i_blue = 0;
    Vertex j_red = 0;
    Vertex j_blue = 0;

    std::array<Vertex, 2> i() const { return {i_red, i_blue}; }
    std::array<Vertex, 2> j() const { return {j_red, j_blue}; }
    bool distinct() const;
    bool in_range(int vertex_count) const;

    friend bool operator==(const Quartet&, const Quartet&) = default;
};

// Q1 on its own: the members carry the colors their names say.
bool quartet_colors_match(const TwoColoring& c, const Quartet& q);

struct ComponentWitness {
    VertexList vertices;
    int i_hits = 0;  // |component ∩ I|
    int j_hits = 0;  // |component ∩ J|
    bool meets_i() const { return i_hits > 0; }
    bool meets_j() const { return j_hits > 0; }
};

struct ClassSplit {
    Color color = Color::red;
    bool forest = false;
    std::vector<ComponentWitness> components;
};

struct QuartetReport {
    bool q1 = false;
    bool q2 = false;
    bool q3 = false;
    // Component structure of each color class of C Δ J (red first).
    std::optional<std::array<ClassSplit, 2>> q3_witness;
    // Set if "meets" read as |∩| >= 1 and as |∩| == 1 disagree. Cannot happen
    // for a quartet whose members are distinct and Q1-colored; reported
    // rather than assumed.
    bool readings_diverge = false;

    bool holds() const { return q1 && q2 && q3; }
};

// Throws invalid_input if c's size differs from g's vertex count.
VertexList color_class(const Graph& g, const TwoColoring& c, Color k);

// Throws invalid_input on an out-of-range vertex.
TwoColoring flip(const TwoColoring& c, std::span<const Vertex> x);

EdgeSet bichromatic_edges(const Graph& g, const TwoColoring& c);

// Throws invalid_input if g is disconnected.
bool is_hamiltonian_coloring(const Graph& g, const TwoColoring& c);
bool is_hamiltonian_bond(const Graph& g, const EdgeSet& b);
bool jaeger_check(const Graph& g, const EdgeSet& b);

// Throws invalid_input if c is not hamiltonian, or q's vertices are out of
// range or not distinct.
QuartetReport is_quartet(const Graph& g, const TwoColoring& c, const Quartet& q);

// Whether the subgraph of g induced by one color class is a tree.
bool class_induces_tree(const Graph& g, const TwoColoring& c, Color k);

}  // namespace dualham
