#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualham/errors.hpp"
#include "dualham/generators.hpp"
#include "dualham/lift.hpp"

using namespace dualham;

namespace {

// Monochromatic edges between fibers x and y of a lift result.
std::vector<Edge> cross_monochromatic(const LiftResult& r, Vertex x, Vertex y) {
    std::vector<Edge> out;
    const auto& c = r.instance.coloring();
    for (Vertex v = 0; v < r.index.g_size(); ++v) {
        Vertex a = r.index.flat(v, x);
        Vertex b = r.index.flat(v, y);
        if (c[a] == c[b]) out.push_back(make_edge(a, b));
    }
    return out;
}

void check_cross_edges(const LiftResult& r) {
    const auto& q = r.base_quartet;
    for (const auto& e : r.tree.graph().edges()) {
        auto mono = cross_monochromatic(r, e.u, e.v);
        CHECK(mono.size() == 2);
        auto expected = std::vector<Edge>{make_edge(r.index.flat(q.i_red, e.u), r.index.flat(q.i_red, e.v)),
                                          make_edge(r.index.flat(q.i_blue, e.u), r.index.flat(q.i_blue, e.v))};
        std::sort(expected.begin(), expected.end());
        CHECK(mono == expected);
    }
}

// The eleven-vertex tree of the construction drawing, with its marked leaves.
Graph drawing_tree() {
    enum { a, s, d, f, g, h, q, w, e, r, t };
    return Graph(11, {{a, s}, {s, d}, {d, f}, {f, g}, {g, h}, {q, w}, {w, e}, {f, r}, {r, t}, {s, w}});
}

}  // namespace

TEST_CASE("seed verification names the failing condition") {
    auto seed = seed_cube_ladder(1);
    auto bad_color = seed.coloring().colors();
    bad_color[0] = opposite(bad_color[0]);
    CHECK_THROWS_AS(SeedInstance::verified(seed.graph(), TwoColoring(bad_color), seed.quartet()),
                    verification_failure);
    auto q = seed.quartet();
    Quartet swapped{q.j_red, q.j_blue, q.i_red, q.i_blue};
    CHECK_THROWS_WITH_AS(SeedInstance::verified(seed.graph(), seed.coloring(), swapped), doctest::Contains("Q2"),
                         verification_failure);
    Quartet overlap{q.i_red, q.i_blue, q.i_red, q.j_blue};
    CHECK_THROWS_AS(SeedInstance::verified(seed.graph(), seed.coloring(), overlap), verification_failure);
}

TEST_CASE("cube to Q4 over one edge") {
    auto seed = seed_cube_ladder(1);
    auto r = lift(seed, path(1).graph(), 0, 1);
    CHECK(r.instance.graph() == hypercube(4));
    CHECK(bichromatic_edges(r.instance.graph(), r.instance.coloring()).size() == 18);
    CHECK(check_claim1(r));
    CHECK(check_claim2(r));
    CHECK(check_fiber_restrictions(r));
    check_cross_edges(r);

    // New quartet: I' = J x {r}, J' = I x {l}.
    const auto& q = seed.quartet();
    const auto& nq = r.instance.quartet();
    CHECK(nq.i_red == r.index.flat(q.j_red, 0));
    CHECK(nq.i_blue == r.index.flat(q.j_blue, 0));
    CHECK(nq.j_red == r.index.flat(q.i_red, 1));
    CHECK(nq.j_blue == r.index.flat(q.i_blue, 1));
}

TEST_CASE("construction tree: parity flips outside I") {
    auto seed = seed_cube_ladder(1);
    auto t = drawing_tree();
    auto r = lift(seed, t, 0, 5);
    CHECK(r.instance.graph().vertex_count() == 88);

    // Depth from the root leaf a, by hand.
    const std::vector<int> depth{0, 1, 2, 3, 4, 5, 3, 2, 3, 4, 5};
    const auto& c = seed.coloring();
    const auto& q = seed.quartet();
    for (Vertex x = 0; x < 11; ++x) {
        for (Vertex v = 0; v < 8; ++v) {
            bool in_i = v == q.i_red || v == q.i_blue;
            Color expected = (depth[x] % 2 == 1 && !in_i) ? opposite(c[v]) : c[v];
            CHECK(r.instance.coloring()[r.index.flat(v, x)] == expected);
        }
    }
    CHECK(check_claim1(r));
    CHECK(check_claim2(r));
    check_cross_edges(r);
}

TEST_CASE("star K_{1,3}") {
    auto seed = seed_cube_ladder(1);
    auto r = lift(seed, star_graph(3), 1, 3);
    CHECK(check_claim1(r));
    CHECK(check_claim2(r));
    check_cross_edges(r);
}

TEST_CASE("lift over a longer path") {
    auto r = lift(seed_cube_ladder(1), path(4).graph(), 0, 4);
    CHECK(r.instance.graph().vertex_count() == 40);
    check_cross_edges(r);
}

TEST_CASE("K1 and bad leaves") {
    auto seed = seed_cube_ladder(1);
    CHECK(lift(seed, Graph(1, {}), 0, 0).instance == seed);
    auto p2 = path(2).graph();
    CHECK_THROWS_AS(lift(seed, p2, 0, 0), invalid_input);
    CHECK_THROWS_AS(lift(seed, p2, 0, 1), invalid_input);
    CHECK_THROWS_AS(lift(seed, p2, 1, 2), invalid_input);
    CHECK_THROWS_AS(lift(seed, cycle_graph(4), 0, 1), invalid_input);
}

TEST_CASE("default leaves") {
    auto t = drawing_tree();
    CHECK(default_leaves(t, LeafOrder::min_max) == std::pair<Vertex, Vertex>{0, 10});
    CHECK(default_leaves(t, LeafOrder::max_min) == std::pair<Vertex, Vertex>{10, 0});
    CHECK(default_leaves(Graph(1, {}), LeafOrder::min_max) == std::pair<Vertex, Vertex>{0, 0});
}

TEST_CASE("chains") {
    auto seed = seed_cube_ladder(1);
    CHECK(lift_chain(seed, {}) == seed);
    std::vector<TreeStep> one{{path(1).graph(), {}, {}}};
    CHECK(lift_chain(seed, one).graph() == hypercube(4));
    std::vector<TreeStep> two{{path(1).graph(), {}, {}}, {path(1).graph(), {}, {}}};
    auto q5 = lift_chain(seed, two);
    CHECK(q5.graph() == hypercube(5));
    CHECK(bichromatic_edges(q5.graph(), q5.coloring()).size() == 80 - 32 + 2);
}
