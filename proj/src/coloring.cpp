#include "dualham/coloring.hpp"

#include <algorithm>

#include "dualham/errors.hpp"

namespace dualham {

namespace {

void require_size(const Graph& g, const TwoColoring& c) {
    if (c.size() != g.vertex_count()) {
        throw invalid_input("coloring has " + std::to_string(c.size()) + " entries for a graph on " +
                            std::to_string(g.vertex_count()) + " vertices");
    }
}

void require_connected(const Graph& g, const char* op) {
    if (!is_connected(g)) throw invalid_input(std::string(op) + ": graph is disconnected");
}

ClassSplit split_class(const Graph& g, const TwoColoring& c, Color k, const Quartet& q) {
    auto sub = induced_subgraph(g, color_class(g, c, k));
    ClassSplit split;
    split.color = k;
    split.forest = is_forest(sub.graph);
    for (const auto& comp : components(sub.graph)) {
        ComponentWitness w;
        w.vertices.reserve(comp.size());
        for (Vertex local : comp) {
            Vertex v = sub.original[local];
            w.vertices.push_back(v);
            if (v == q.i_red || v == q.i_blue) ++w.i_hits;
            if (v == q.j_red || v == q.j_blue) ++w.j_hits;
        }
        split.components.push_back(std::move(w));
    }
    return split;
}

// Exactly two components; one meets I and not J, the other J and not I.
// `exact` selects the |∩| == 1 reading instead of |∩| >= 1.
bool split_ok(const ClassSplit& s, bool exact) {
    if (!s.forest || s.components.size() != 2) return false;
    auto meets = [exact](int hits) { return exact ? hits == 1 : hits >= 1; };
    auto i_side = [&](const ComponentWitness& w) { return meets(w.i_hits) && w.j_hits == 0; };
    auto j_side = [&](const ComponentWitness& w) { return meets(w.j_hits) && w.i_hits == 0; };
    const auto& a = s.components[0];
    const auto& b = s.components[1];
    return (i_side(a) && j_side(b)) || (j_side(a) && i_side(b));
}

}  // namespace

std::string_view color_name(Color c) { return c == Color::red ? "red" : "blue"; }

TwoColoring TwoColoring::from_string(std::string_view s) {
    std::vector<Color> colors;
    colors.reserve(s.size());
    for (char ch : s) {
        if (ch == 'r') {
            colors.push_back(Color::red);
        } else if (ch == 'b') {
            colors.push_back(Color::blue);
        } else {
            throw parse_error(std::string("coloring string: unexpected character '") + ch + "'");
        }
    }
    return TwoColoring(std::move(colors));
}

std::string TwoColoring::to_string() const {
    std::string out;
    out.reserve(colors_.size());
    for (Color c : colors_) out.push_back(color_char(c));
    return out;
}

bool Quartet::distinct() const {
    return i_red != i_blue && i_red != j_red && i_red != j_blue && i_blue != j_red && i_blue != j_blue &&
           j_red != j_blue;
}

bool Quartet::in_range(int vertex_count) const {
    for (Vertex v : {i_red, i_blue, j_red, j_blue}) {
        if (v < 0 || v >= vertex_count) return false;
    }
    return true;
}

bool quartet_colors_match(const TwoColoring& c, const Quartet& q) {
    if (!q.in_range(c.size())) return false;
    return c[q.i_red] == Color::red && c[q.i_blue] == Color::blue && c[q.j_red] == Color::red &&
           c[q.j_blue] == Color::blue;
}

VertexList color_class(const Graph& g, const TwoColoring& c, Color k) {
    require_size(g, c);
    VertexList out;
    for (Vertex v = 0; v < c.size(); ++v) {
        if (c[v] == k) out.push_back(v);
    }
    return out;
}

TwoColoring flip(const TwoColoring& c, std::span<const Vertex> x) {
    auto colors = c.colors();
    std::vector<bool> seen(colors.size(), false);
    for (Vertex v : x) {
        if (v < 0 || v >= c.size()) throw invalid_input("flip: vertex " + std::to_string(v) + " out of range");
        // A repeated member is still flipped once: x is a set.
        if (seen[v]) continue;
        seen[v] = true;
        colors[v] = opposite(colors[v]);
    }
    return TwoColoring(std::move(colors));
}

EdgeSet bichromatic_edges(const Graph& g, const TwoColoring& c) {
    require_size(g, c);
    EdgeSet out;
    for (const auto& e : g.edges()) {
        if (c[e.u] != c[e.v]) out.push_back(e);
    }
    return out;
}

bool class_induces_tree(const Graph& g, const TwoColoring& c, Color k) {
    return is_tree(induced_subgraph(g, color_class(g, c, k)).graph);
}

bool is_hamiltonian_coloring(const Graph& g, const TwoColoring& c) {
    require_connected(g, "is_hamiltonian_coloring");
    require_size(g, c);
    // is_tree rejects the empty graph, so both classes must be nonempty.
    return class_induces_tree(g, c, Color::red) && class_induces_tree(g, c, Color::blue);
}

bool is_hamiltonian_bond(const Graph& g, const EdgeSet& b) {
    require_connected(g, "is_hamiltonian_bond");
    return static_cast<int>(b.size()) == g.edge_count() - g.vertex_count() + 2 && is_bond(g, b);
}

bool jaeger_check(const Graph& g, const EdgeSet& b) {
    require_connected(g, "jaeger_check");
    auto parts = components(delete_edges(g, b));
    if (parts.size() != 2) return false;
    return std::all_of(parts.begin(), parts.end(),
                       [&](const VertexList& part) { return is_tree(induced_subgraph(g, part).graph); });
}

QuartetReport is_quartet(const Graph& g, const TwoColoring& c, const Quartet& q) {
    if (!q.in_range(g.vertex_count())) throw invalid_input("is_quartet: quartet vertex out of range");
    if (!q.distinct()) throw invalid_input("is_quartet: quartet vertices are not pairwise distinct");
    if (!is_hamiltonian_coloring(g, c)) throw invalid_input("is_quartet: coloring is not hamiltonian");

    QuartetReport report;
    report.q1 = quartet_colors_match(c, q);
    auto i = q.i();
    auto j = q.j();
    report.q2 = is_hamiltonian_coloring(g, flip(c, i));

    auto flipped = flip(c, j);
    std::array<ClassSplit, 2> splits{split_class(g, flipped, Color::red, q),
                                     split_class(g, flipped, Color::blue, q)};
    bool loose = split_ok(splits[0], false) && split_ok(splits[1], false);
    bool exact = split_ok(splits[0], true) && split_ok(splits[1], true);
    report.q3 = loose;
    report.readings_diverge = loose != exact;
    report.q3_witness = std::move(splits);
    return report;
}

}  // namespace dualham
