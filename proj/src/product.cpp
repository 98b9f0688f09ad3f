#include "dualham/product.hpp"

#include <string>

#include "dualham/errors.hpp"

namespace dualham {

ProductGraph cartesian_product(const Graph& g, const Graph& h) {
    if (g.empty() || h.empty()) throw invalid_input("cartesian_product: empty factor");
    ProductIndex index(g.vertex_count(), h.vertex_count());
    EdgeSet edges;
    edges.reserve(static_cast<std::size_t>(g.vertex_count()) * h.edge_count() +
                  static_cast<std::size_t>(h.vertex_count()) * g.edge_count());
    for (Vertex x = 0; x < h.vertex_count(); ++x) {
        for (const auto& e : g.edges()) edges.push_back({index.flat(e.u, x), index.flat(e.v, x)});
    }
    for (const auto& e : h.edges()) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) edges.push_back({index.flat(v, e.u), index.flat(v, e.v)});
    }
    return {Graph(index.size(), std::move(edges)), index};
}

VertexList fiber_vertices(const ProductIndex& index, Vertex x) {
    if (x < 0 || x >= index.h_size()) {
        throw invalid_input("fiber_vertices: " + std::to_string(x) + " is not a vertex of the second factor");
    }
    VertexList out(index.g_size());
    for (Vertex v = 0; v < index.g_size(); ++v) out[v] = index.flat(v, x);
    return out;
}

VertexList fiber_vertices(const ProductGraph& p, Vertex x) { return fiber_vertices(p.index, x); }

Graph product_fold(std::span<const Graph> factors) {
    if (factors.empty()) throw invalid_input("product_fold: no factors");
    Graph acc = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) acc = cartesian_product(acc, factors[k]).graph;
    return acc;
}

}  // namespace dualham
