#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dualham/errors.hpp"
#include "dualham/generators.hpp"
#include "dualham/product.hpp"
#include "dualham/solver.hpp"
#include "support.hpp"

using namespace dualham;

namespace {

// Oracle list: every partition into two induced trees, vertex 0 red, sorted
// the same way the solver sorts.
std::vector<TwoColoring> brute_colorings(const Graph& g) {
    auto og = support::to_oracle(g);
    std::vector<TwoColoring> out;
    for (std::uint32_t red = 1; red < (1u << g.vertex_count()); red += 2)
        if (oracle::is_ham_partition(og, red)) out.push_back(support::from_mask(g.vertex_count(), red));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("enumeration on small graphs") {
    auto c4 = Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto e = enumerate_hamiltonian_colorings(c4);
    CHECK(e.complete);
    // A single vertex is a tree, so {0}|{1,2,3} and its rotations count too.
    REQUIRE(e.colorings.size() == 6);
    CHECK(e.colorings == brute_colorings(c4));
    CHECK(enumerate_hamiltonian_colorings(complete_graph(4)).colorings.size() == 3);
    auto ce = enumerate_hamiltonian_colorings(counterexample_graph());
    REQUIRE(ce.colorings.size() == 1);
    CHECK(ce.colorings[0].to_string() == "rrrrbbbb");
}

TEST_CASE("enumeration matches brute force on the corpus") {
    for (const auto& ng : support::corpus()) {
        if (!is_connected(ng.graph) || ng.graph.vertex_count() < 2) continue;
        INFO(ng.id);
        CHECK(enumerate_hamiltonian_colorings(ng.graph).colorings == brute_colorings(ng.graph));
    }
}

TEST_CASE("symmetry breaking halves the ordered count") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& t : free_trees(n)) {
            auto og = support::to_oracle(t);
            int ordered = 0;
            for (std::uint32_t red = 0; red < (1u << n); ++red) ordered += oracle::is_ham_partition(og, red);
            CHECK(2 * enumerate_hamiltonian_colorings(t).colorings.size() == static_cast<std::size_t>(ordered));
        }
    }
}

TEST_CASE("thread count does not change results") {
    for (const auto& g : {grid({{2, 3}}), hypercube(3), seed_cube_ladder(3).graph()}) {
        auto serial = enumerate_hamiltonian_colorings(g);
        SolverOptions opts;
        opts.threads = 4;
        auto parallel = enumerate_hamiltonian_colorings(g, opts);
        CHECK(parallel.colorings == serial.colorings);
        CHECK(parallel.complete);
    }
}

TEST_CASE("decision") {
    CHECK(is_dual_hamiltonian(hypercube(2)).status == SolveStatus::found);
    CHECK(is_dual_hamiltonian(complete_graph(5)).status == SolveStatus::none_exhaustive);
    CHECK(is_dual_hamiltonian(complete_graph(6)).status == SolveStatus::none_exhaustive);
    auto ce = cartesian_product(counterexample_graph(), path(1).graph());
    CHECK(is_dual_hamiltonian(ce.graph).status == SolveStatus::none_exhaustive);

    auto found = is_dual_hamiltonian(hypercube(3));
    REQUIRE(found.coloring);
    CHECK(is_hamiltonian_coloring(hypercube(3), *found.coloring));

    CHECK_THROWS_AS(is_dual_hamiltonian(Graph(3, {{0, 1}})), invalid_input);
    CHECK_THROWS_AS(is_dual_hamiltonian(grid({{5, 5}})), invalid_input);
}

TEST_CASE("budgets") {
    SolverOptions opts;
    opts.budget.nodes = 50;
    auto r = is_dual_hamiltonian(cartesian_product(counterexample_graph(), path(1).graph()).graph, opts);
    CHECK(r.status == SolveStatus::aborted_budget);
    CHECK(r.stats.nodes <= 51);
    auto e = enumerate_hamiltonian_colorings(hypercube(4), opts);
    CHECK_FALSE(e.complete);

    // Above the cap a budget is required.
    SolverOptions capped;
    capped.vertex_cap = 10;
    CHECK_THROWS_AS(is_dual_hamiltonian(hypercube(4), capped), invalid_input);
    capped.budget.wall = std::chrono::milliseconds(5000);
    CHECK(is_dual_hamiltonian(hypercube(4), capped).status == SolveStatus::found);
}

TEST_CASE("quartet search") {
    auto seed = seed_cube_ladder(1);
    auto q = find_quartet(seed.graph(), seed.coloring());
    REQUIRE(q);
    CHECK(is_quartet(seed.graph(), seed.coloring(), *q).holds());

    auto ce = counterexample_graph();
    CHECK_FALSE(find_quartet(ce, TwoColoring::from_string("rrrrbbbb")));

    auto c4 = Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto c = TwoColoring::from_string("rrbb");
    CHECK_FALSE(find_quartet(c4, c));
    // Exhaustively: no ordering of the four vertices is a quartet.
    std::vector<Vertex> perm{0, 1, 2, 3};
    do {
        CHECK_FALSE(is_quartet(c4, c, Quartet{perm[0], perm[1], perm[2], perm[3]}).holds());
    } while (std::next_permutation(perm.begin(), perm.end()));

    CHECK_THROWS_AS(find_quartet(c4, TwoColoring::from_string("rbrb")), invalid_input);

    auto r = find_quartet_coloring(hypercube(3));
    CHECK(r.status == SolveStatus::found);
    REQUIRE(r.quartet);
    CHECK(is_quartet(hypercube(3), *r.coloring, *r.quartet).holds());
}

TEST_CASE("lifted instances are confirmed by search") {
    auto seed = seed_cube_ladder(1);
    for (int n = 2; n <= 3; ++n) {
        for (const auto& t : free_trees(n)) {
            auto lifted = lift(seed, t);
            CHECK(is_dual_hamiltonian(lifted.instance.graph()).status == SolveStatus::found);
        }
    }
}

TEST_CASE("density") {
    auto k5 = density_check(complete_graph(5));
    REQUIRE(k5);
    CHECK(*k5 == VertexList{0, 1, 2, 3, 4});
    CHECK_FALSE(density_check(complete_graph(4)));
    CHECK_FALSE(density_check(hypercube(3)));

    // Smallest violating set inside a larger graph: K5 plus a pendant path.
    Graph g(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}});
    auto v = density_check(g);
    REQUIRE(v);
    CHECK(*v == VertexList{0, 1, 2, 3, 4});

    // Never flags a graph the solver colors.
    for (const auto& ng : support::corpus()) {
        if (!is_connected(ng.graph)) continue;
        if (is_dual_hamiltonian(ng.graph).status == SolveStatus::found) CHECK_FALSE(density_check(ng.graph));
    }
}

TEST_CASE("census") {
    std::vector<NamedGraph> graphs{{"K4", complete_graph(4)}, {"K5", complete_graph(5)}, {"Q3", hypercube(3)}};
    auto rows = census(graphs);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].dual.status == SolveStatus::found);
    CHECK(rows[1].dual.status == SolveStatus::none_exhaustive);
    CHECK(rows[1].density_violation);
    CHECK(rows[2].quartet.status == SolveStatus::found);

    for (int m = 2; m <= 3; ++m)
        for (int n = 3; n <= 4; ++n) {
            auto r = find_quartet_coloring(grid({{m, n}}));
            CHECK(r.status == SolveStatus::found);
        }
}
