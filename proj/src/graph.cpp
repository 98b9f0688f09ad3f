#include "dualham/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "dualham/errors.hpp"

namespace dualham {

Edge make_edge(Vertex a, Vertex b) {
    if (a == b) {
        throw invalid_input("loop edge at vertex " + std::to_string(a));
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

EdgeSet make_edge_set(std::span<const std::pair<Vertex, Vertex>> pairs) {
    EdgeSet out;
    out.reserve(pairs.size());
    for (auto [a, b] : pairs) out.push_back(make_edge(a, b));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EdgeSet make_edge_set(std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    return make_edge_set(std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
}

Graph::Graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> pairs)
    : edges_(make_edge_set(pairs)) {
    build(vertex_count);
}

Graph::Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> pairs)
    : edges_(make_edge_set(pairs)) {
    build(vertex_count);
}

Graph::Graph(int vertex_count, EdgeSet edges) : edges_(std::move(edges)) {
    for (auto& e : edges_) e = make_edge(e.u, e.v);
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    build(vertex_count);
}

void Graph::build(int vertex_count) {
    if (vertex_count < 0) {
        throw invalid_input("negative vertex count");
    }
    adjacency_.assign(vertex_count, {});
    for (const auto& e : edges_) {
        if (e.u < 0 || e.v >= vertex_count) {
            throw invalid_input("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                "} out of range for " + std::to_string(vertex_count) + " vertices");
        }
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    // Edges are sorted by (u, v); the v-side lists need sorting.
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (!has_vertex(a) || !has_vertex(b)) return false;
    const auto& list = adjacency_[a];
    return std::binary_search(list.begin(), list.end(), b);
}

std::vector<int> component_labels(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> label(n, -1);
    std::vector<Vertex> stack;
    int next = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (label[s] != -1) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (label[w] == -1) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

std::vector<VertexList> components(const Graph& g) {
    auto label = component_labels(g);
    int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<VertexList> out(count);
    for (Vertex v = 0; v < g.vertex_count(); ++v) out[label[v]].push_back(v);
    return out;
}

int component_count(const Graph& g) {
    auto label = component_labels(g);
    return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
    VertexList members(s.begin(), s.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<int> relabel(g.vertex_count(), -1);
    for (std::size_t k = 0; k < members.size(); ++k) {
        if (!g.has_vertex(members[k])) {
            throw invalid_input("induced_subgraph: vertex " + std::to_string(members[k]) + " out of range");
        }
        relabel[members[k]] = static_cast<int>(k);
    }
    EdgeSet edges;
    for (Vertex v : members) {
        for (Vertex w : g.neighbors(v)) {
            if (w > v && relabel[w] != -1) edges.push_back({relabel[v], relabel[w]});
        }
    }
    int n = static_cast<int>(members.size());
    return {Graph(n, std::move(edges)), std::move(members)};
}

bool is_forest(const Graph& g) {
    return g.edge_count() == g.vertex_count() - component_count(g);
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

Graph delete_edges(const Graph& g, const EdgeSet& b) {
    for (const auto& e : b) {
        if (!g.has_edge(e.u, e.v)) {
            throw invalid_input("delete_edges: {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                "} is not an edge");
        }
    }
    EdgeSet sorted_b = b;
    std::sort(sorted_b.begin(), sorted_b.end());
    EdgeSet kept;
    kept.reserve(g.edges().size());
    std::set_difference(g.edges().begin(), g.edges().end(), sorted_b.begin(), sorted_b.end(),
                        std::back_inserter(kept));
    return Graph(g.vertex_count(), std::move(kept));
}

bool is_bond(const Graph& g, const EdgeSet& b) {
    if (!is_connected(g)) throw invalid_input("is_bond: graph is disconnected");
    auto rest = delete_edges(g, b);
    auto label = component_labels(rest);
    if (*std::max_element(label.begin(), label.end()) != 1) return false;
    return std::all_of(b.begin(), b.end(), [&](const Edge& e) { return label[e.u] != label[e.v]; });
}

EdgeSet bridges(const Graph& g) {
    // Iterative lowlink DFS. Simple graphs only, so skipping the parent
    // vertex is the same as skipping the parent edge.
    const int n = g.vertex_count();
    std::vector<int> order(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::size_t> cursor(n, 0);
    EdgeSet out;
    int clock = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (order[s] != -1) continue;
        order[s] = low[s] = clock++;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            auto nbrs = g.neighbors(v);
            if (cursor[v] < nbrs.size()) {
                Vertex w = nbrs[cursor[v]++];
                if (w == parent[v]) continue;
                if (order[w] == -1) {
                    parent[w] = v;
                    order[w] = low[w] = clock++;
                    stack.push_back(w);
                } else {
                    low[v] = std::min(low[v], order[w]);
                }
            } else {
                stack.pop_back();
                Vertex p = parent[v];
                if (p != -1) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > order[p]) out.push_back(make_edge(p, v));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Tree bfs_tree(const Graph& g, Vertex root) {
    if (!g.has_vertex(root)) {
        throw invalid_input("bfs_tree: root " + std::to_string(root) + " out of range");
    }
    if (!is_tree(g)) throw invalid_input("bfs_tree: graph is not a tree");
    std::vector<int> depth(g.vertex_count(), -1);
    std::queue<Vertex> queue;
    depth[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(v)) {
            if (depth[w] == -1) {
                depth[w] = depth[v] + 1;
                queue.push(w);
            }
        }
    }
    return Tree(g, root, std::move(depth));
}

VertexList leaves(const Graph& tree) {
    if (tree.vertex_count() == 1) return {0};
    VertexList out;
    for (Vertex v = 0; v < tree.vertex_count(); ++v) {
        if (tree.degree(v) == 1) out.push_back(v);
    }
    return out;
}

VertexList leaves(const Tree& t) {
    if (t.size() == 1) return {t.root()};
    return leaves(t.graph());
}

}  // namespace dualham
