#include "dualham/lift.hpp"

#include <algorithm>
#include <string>

#include "dualham/errors.hpp"

namespace dualham {

SeedInstance SeedInstance::verified(Graph graph, TwoColoring coloring, Quartet quartet) {
    if (!is_connected(graph)) throw verification_failure("seed instance: graph is disconnected");
    if (coloring.size() != graph.vertex_count()) {
        throw verification_failure("seed instance: coloring size does not match the graph");
    }
    if (!is_hamiltonian_coloring(graph, coloring)) {
        throw verification_failure("seed instance: coloring is not hamiltonian");
    }
    if (!quartet.in_range(graph.vertex_count()) || !quartet.distinct()) {
        throw verification_failure("seed instance: quartet vertices must be four distinct vertices");
    }
    auto report = is_quartet(graph, coloring, quartet);
    if (!report.q1) throw verification_failure("seed instance: quartet fails Q1");
    if (!report.q2) throw verification_failure("seed instance: quartet fails Q2");
    if (!report.q3) throw verification_failure("seed instance: quartet fails Q3");
    if (report.readings_diverge) {
        throw verification_failure("seed instance: Q3 'meets' readings diverge");
    }
    return SeedInstance(std::move(graph), std::move(coloring), quartet);
}

std::pair<Vertex, Vertex> default_leaves(const Graph& tree, LeafOrder order) {
    auto ls = leaves(tree);
    if (ls.empty()) throw invalid_input("tree has no leaves");
    Vertex lo = ls.front();
    Vertex hi = ls.back();
    return order == LeafOrder::min_max ? std::pair{lo, hi} : std::pair{hi, lo};
}

LiftResult lift(const SeedInstance& seed, const Tree& t, Vertex l) {
    const Graph& g = seed.graph();
    const TwoColoring& c = seed.coloring();
    const Quartet& q = seed.quartet();
    const Vertex r = t.root();

    if (t.size() == 1) {
        if (l != r) throw invalid_input("lift: single-vertex tree has only the leaf " + std::to_string(r));
        return {seed, g, q, t, l, ProductIndex(g.vertex_count(), 1)};
    }
    auto ls = leaves(t);
    auto is_leaf = [&](Vertex v) { return std::binary_search(ls.begin(), ls.end(), v); };
    if (!is_leaf(r)) throw invalid_input("lift: root " + std::to_string(r) + " is not a leaf");
    if (!t.graph().has_vertex(l) || !is_leaf(l)) {
        throw invalid_input("lift: l = " + std::to_string(l) + " is not a leaf");
    }
    if (l == r) throw invalid_input("lift: l must differ from r");

    auto product = cartesian_product(g, t.graph());
    const auto& index = product.index;

    std::vector<Color> lifted(index.size());
    for (Vertex x = 0; x < t.size(); ++x) {
        const bool odd = t.depth(x) % 2 == 1;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            const bool keep = !odd || v == q.i_red || v == q.i_blue;
            lifted[index.flat(v, x)] = keep ? c[v] : opposite(c[v]);
        }
    }

    // d(r) = 0, so J's members keep C's colors on G_r; I's members keep them
    // on every fiber, in particular on G_l.
    Quartet lifted_quartet{
        .i_red = index.flat(q.j_red, r),
        .i_blue = index.flat(q.j_blue, r),
        .j_red = index.flat(q.i_red, l),
        .j_blue = index.flat(q.i_blue, l),
    };

    SeedInstance instance = [&] {
        try {
            return SeedInstance::verified(std::move(product.graph), TwoColoring(std::move(lifted)),
                                          lifted_quartet);
        } catch (const verification_failure& e) {
            throw verification_failure(std::string("lift produced an invalid instance: ") + e.what());
        }
    }();
    return {std::move(instance), g, q, t, l, index};
}

LiftResult lift(const SeedInstance& seed, const Graph& tree, Vertex r, Vertex l) {
    return lift(seed, bfs_tree(tree, r), l);
}

LiftResult lift(const SeedInstance& seed, const Graph& tree, LeafOrder order) {
    if (!is_tree(tree)) throw invalid_input("lift: second factor is not a tree");
    auto [r, l] = default_leaves(tree, order);
    return lift(seed, tree, r, l);
}

SeedInstance lift_chain(const SeedInstance& seed, std::span<const TreeStep> steps, LeafOrder order) {
    SeedInstance acc = seed;
    for (const auto& step : steps) {
        if (!is_tree(step.tree)) throw invalid_input("lift_chain: factor is not a tree");
        auto [r, l] = default_leaves(step.tree, order);
        acc = lift(acc, step.tree, step.r.value_or(r), step.l.value_or(l)).instance;
    }
    return acc;
}

bool check_claim1(const LiftResult& result) {
    const auto& h = result.instance.graph();
    const auto& d = result.instance.coloring();
    const auto& index = result.index;
    const auto& q = result.base_quartet;
    for (const auto& te : result.tree.graph().edges()) {
        int red = 0;
        int blue = 0;
        for (Vertex v = 0; v < index.g_size(); ++v) {
            Vertex a = index.flat(v, te.u);
            Vertex b = index.flat(v, te.v);
            if (!h.has_edge(a, b)) return false;
            if (d[a] != d[b]) continue;
            const Vertex expected = d[a] == Color::red ? q.i_red : q.i_blue;
            if (v != expected) return false;
            ++(d[a] == Color::red ? red : blue);
        }
        if (red != 1 || blue != 1) return false;
    }
    return true;
}

bool check_claim2(const LiftResult& result) {
    const auto& h = result.instance.graph();
    const auto& d = result.instance.coloring();
    const auto& index = result.index;
    const auto& q = result.base_quartet;
    for (Color k : {Color::red, Color::blue}) {
        auto sub = induced_subgraph(h, color_class(h, d, k));
        auto bridge_list = bridges(sub.graph);
        // Back to product ids.
        EdgeSet global;
        global.reserve(bridge_list.size());
        for (const auto& e : bridge_list) global.push_back(make_edge(sub.original[e.u], sub.original[e.v]));
        std::sort(global.begin(), global.end());
        const Vertex member = k == Color::red ? q.i_red : q.i_blue;
        for (const auto& te : result.tree.graph().edges()) {
            auto e = make_edge(index.flat(member, te.u), index.flat(member, te.v));
            if (!std::binary_search(global.begin(), global.end(), e)) return false;
        }
    }
    return true;
}

bool check_fiber_restrictions(const LiftResult& result) {
    const auto& d = result.instance.coloring();
    const auto& index = result.index;
    for (Vertex x = 0; x < index.h_size(); ++x) {
        std::vector<Color> restricted(index.g_size());
        for (Vertex v = 0; v < index.g_size(); ++v) restricted[v] = d[index.flat(v, x)];
        if (!is_hamiltonian_coloring(result.base, TwoColoring(std::move(restricted)))) return false;
    }
    return true;
}

}  // namespace dualham
