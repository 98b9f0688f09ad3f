#pragma once

// Lifting a hamiltonian coloring with a quartet from G to G × T for a tree T.
//
// Root T at a leaf r and let d(x) be the depth of x. On the fiber G_x the
// lifted coloring D copies C when d(x) is even, and is C with every vertex
// outside I swapped when d(x) is odd. I's members therefore keep their colors
// on every fiber, and the T-edge copies of i_red and i_blue are the only
// monochromatic edges between adjacent fibers. With l another leaf of T, the
// new quartet is I' = J × {r}, J' = I × {l}.
//
// Every result is re-verified from scratch before it is returned.

#include <optional>
#include <span>
#include <vector>

#include "dualham/coloring.hpp"
#include "dualham/graph.hpp"
#include "dualham/product.hpp"

namespace dualham {

// A connected graph with a hamiltonian coloring and a quartet for it. The
// only way to obtain one is through verified(), which checks everything.
class SeedInstance {
public:
    // Throws verification_failure (with the failing condition named) unless
    // graph is connected, coloring is hamiltonian and quartet satisfies
    // Q1-Q3.
    static SeedInstance verified(Graph graph, TwoColoring coloring, Quartet quartet);

    const Graph& graph() const { return graph_; }
    const TwoColoring& coloring() const { return coloring_; }
    const Quartet& quartet() const { return quartet_; }

    friend bool operator==(const SeedInstance&, const SeedInstance&) = default;

private:
    SeedInstance(Graph g, TwoColoring c, Quartet q)
        : graph_(std::move(g)), coloring_(std::move(c)), quartet_(q) {}

    Graph graph_;
    TwoColoring coloring_;
    Quartet quartet_;
};

enum class LeafOrder {
    min_max,  // r = smallest leaf id, l = largest
    max_min,
};

struct LiftResult {
    SeedInstance instance;
    // Construction metadata, kept for the post-hoc claim checks.
    Graph base;
    Quartet base_quartet;
    Tree tree;
    Vertex l = 0;
    ProductIndex index;
};

// t must be rooted at a leaf r; l must be a different leaf. A single-vertex
// tree returns the seed unchanged. Throws invalid_input on bad leaves and
// verification_failure if the result does not verify.
LiftResult lift(const SeedInstance& seed, const Tree& t, Vertex l);
LiftResult lift(const SeedInstance& seed, const Graph& tree, Vertex r, Vertex l);
LiftResult lift(const SeedInstance& seed, const Graph& tree, LeafOrder order = LeafOrder::min_max);

// (r, l) under the given default order. For K1 both are 0.
std::pair<Vertex, Vertex> default_leaves(const Graph& tree, LeafOrder order);

struct TreeStep {
    Graph tree;
    std::optional<Vertex> r;
    std::optional<Vertex> l;
};

SeedInstance lift_chain(const SeedInstance& seed, std::span<const TreeStep> steps,
                        LeafOrder order = LeafOrder::min_max);

// For every T-edge xy and color k, the only k-monochromatic edge between
// fibers G_x and G_y is (i_k, x)(i_k, y).
bool check_claim1(const LiftResult& result);

// For every T-edge xy and color k, (i_k, x)(i_k, y) is a bridge of the
// subgraph induced by the k-colored vertices.
bool check_claim2(const LiftResult& result);

// The lifted coloring restricted to each fiber is a hamiltonian coloring of
// that fiber.
bool check_fiber_restrictions(const LiftResult& result);

}  // namespace dualham
