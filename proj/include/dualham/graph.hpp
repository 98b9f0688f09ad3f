#pragma once

// Simple undirected graphs over dense vertex ids 0..n-1 and the structural
// predicates used by the hamiltonian-coloring checks.
//
// Bonds. For a connected graph G, an edge set B is a bond (a minimal
// disconnecting set) iff G - B has exactly two components and every edge of
// B joins the two. Sketch: if G - B has components X, Y and all of B crosses,
// putting any e in B back reconnects X and Y, so no proper subset
// disconnects. Conversely a minimal B leaves exactly two components (adding
// back one edge must reconnect, and one edge merges at most two components),
// and an edge of B inside one component could be dropped from B. is_bond
// uses this characterization; tests cross-check it against the subset
// definition exhaustively on small graphs.

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace dualham {

using Vertex = int;

// Canonical undirected edge: u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Throws invalid_input on a loop.
Edge make_edge(Vertex a, Vertex b);

// Sorted, duplicate-free.
using EdgeSet = std::vector<Edge>;
// Sorted ascending, duplicate-free unless stated otherwise.
using VertexList = std::vector<Vertex>;

EdgeSet make_edge_set(std::span<const std::pair<Vertex, Vertex>> pairs);
EdgeSet make_edge_set(std::initializer_list<std::pair<Vertex, Vertex>> pairs);

class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> pairs);
    Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> pairs);
    Graph(int vertex_count, EdgeSet edges);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return adjacency_.empty(); }

    const EdgeSet& edges() const { return edges_; }
    // Ascending.
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

    bool has_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }
    bool has_edge(Vertex a, Vertex b) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
    }

private:
    void build(int vertex_count);

    EdgeSet edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

// The empty graph is not connected; K1 is.
bool is_connected(const Graph& g);

// Component label per vertex; labels are numbered by smallest member.
std::vector<int> component_labels(const Graph& g);
// Components ordered by smallest member, members ascending.
std::vector<VertexList> components(const Graph& g);
int component_count(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    // original[k] is the id in the parent graph of vertex k.
    VertexList original;
};

// Relabels the members of s to 0..|s|-1 by ascending original id.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

bool is_forest(const Graph& g);
// The empty graph is not a tree; K1 is.
bool is_tree(const Graph& g);

// Throws invalid_input if b holds a non-edge of g.
Graph delete_edges(const Graph& g, const EdgeSet& b);

// Throws invalid_input if g is disconnected or b holds a non-edge.
bool is_bond(const Graph& g, const EdgeSet& b);

// Edges whose removal increases the component count.
EdgeSet bridges(const Graph& g);

class Tree {
public:
    const Graph& graph() const { return graph_; }
    Vertex root() const { return root_; }
    // BFS distance from the root.
    int depth(Vertex v) const { return depth_[v]; }
    const std::vector<int>& depths() const { return depth_; }
    int size() const { return graph_.vertex_count(); }

private:
    friend Tree bfs_tree(const Graph& g, Vertex root);
    Tree(Graph g, Vertex root, std::vector<int> depth)
        : graph_(std::move(g)), root_(root), depth_(std::move(depth)) {}

    Graph graph_;
    Vertex root_ = 0;
    std::vector<int> depth_;
};

// Throws invalid_input if g is not a tree or root is out of range.
Tree bfs_tree(const Graph& g, Vertex root);

// Degree-1 vertices, ascending. For K1 returns {root}.
VertexList leaves(const Tree& t);
VertexList leaves(const Graph& tree);

}  // namespace dualham
