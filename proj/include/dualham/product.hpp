#pragma once

// Cartesian product G × H. Vertex (v, x) with v in G and x in H gets flat id
// x * |G| + v, so the fiber G_x = V(G) × {x} is the contiguous id range
// [x|G|, (x+1)|G|).

#include <span>
#include <utility>

#include "dualham/graph.hpp"

namespace dualham {

class ProductIndex {
public:
    ProductIndex() = default;
    ProductIndex(int g_size, int h_size) : g_size_(g_size), h_size_(h_size) {}

    int g_size() const { return g_size_; }
    int h_size() const { return h_size_; }
    int size() const { return g_size_ * h_size_; }

    Vertex flat(Vertex v, Vertex x) const { return x * g_size_ + v; }
    // (v, x) for a flat id.
    std::pair<Vertex, Vertex> split(Vertex id) const { return {id % g_size_, id / g_size_}; }

    friend bool operator==(const ProductIndex&, const ProductIndex&) = default;

private:
    int g_size_ = 0;
    int h_size_ = 0;
};

struct ProductGraph {
    Graph graph;
    ProductIndex index;
};

// Throws invalid_input if either factor is empty.
ProductGraph cartesian_product(const Graph& g, const Graph& h);

// Flat ids of V(G) × {x}, ascending. Throws invalid_input if x is out of range.
VertexList fiber_vertices(const ProductGraph& p, Vertex x);
VertexList fiber_vertices(const ProductIndex& index, Vertex x);

// Left fold: ((f0 × f1) × f2) × ...
Graph product_fold(std::span<const Graph> factors);

}  // namespace dualham
