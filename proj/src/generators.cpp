#include "dualham/generators.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "dualham/errors.hpp"
#include "dualham/product.hpp"
#include "dualham/reference_drawings.hpp"

namespace dualham {

namespace {

Color drawn(char ch) { return ch == 'G' ? Color::red : Color::blue; }

// AHU encoding of the tree rooted at v.
std::string encode(const Graph& t, Vertex v, Vertex parent) {
    std::vector<std::string> parts;
    for (Vertex w : t.neighbors(v)) {
        if (w != parent) parts.push_back(encode(t, w, v));
    }
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ")";
    return out;
}

VertexList centers(const Graph& t) {
    const int n = t.vertex_count();
    if (n <= 2) {
        VertexList all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        return all;
    }
    std::vector<int> degree(n);
    VertexList layer;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = t.degree(v);
        if (degree[v] == 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        VertexList next;
        for (Vertex v : layer) {
            for (Vertex w : t.neighbors(v)) {
                if (--degree[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string canonical_form(const Graph& t) {
    std::string best;
    for (Vertex c : centers(t)) {
        auto code = encode(t, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

Graph tree_from_pruefer(const std::vector<int>& seq, int n) {
    std::vector<int> degree(n, 1);
    for (int s : seq) ++degree[s];
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int s : seq) {
        for (Vertex v = 0; v < n; ++v) {
            if (degree[v] == 1) {
                edges.emplace_back(v, s);
                --degree[v];
                --degree[s];
                break;
            }
        }
    }
    Vertex a = -1;
    for (Vertex v = 0; v < n; ++v) {
        if (degree[v] == 1) {
            if (a == -1) {
                a = v;
            } else {
                edges.emplace_back(a, v);
                break;
            }
        }
    }
    return Graph(n, edges);
}

}  // namespace

Tree path(int n) {
    if (n < 0) throw invalid_input("path: negative length");
    EdgeSet edges;
    for (Vertex k = 0; k < n; ++k) edges.push_back({k, k + 1});
    return bfs_tree(Graph(n + 1, std::move(edges)), 0);
}

Graph hypercube(int n, int cap) {
    if (n < 1) throw invalid_input("hypercube: dimension must be >= 1");
    if (n > cap) throw invalid_input("hypercube: dimension " + std::to_string(n) + " above cap " + std::to_string(cap));
    const int size = 1 << n;
    EdgeSet edges;
    edges.reserve(static_cast<std::size_t>(n) << (n - 1));
    for (Vertex v = 0; v < size; ++v) {
        for (int bit = 0; bit < n; ++bit) {
            if (!(v & (1 << bit))) edges.push_back({v, v | (1 << bit)});
        }
    }
    return Graph(size, std::move(edges));
}

Graph grid(const GridSpec& spec) {
    if (spec.dims.empty()) throw invalid_input("grid: no dimensions");
    std::vector<Graph> factors;
    for (int d : spec.dims) {
        if (d < 1) throw invalid_input("grid: every dimension must be >= 1");
        factors.push_back(path(d).graph());
    }
    return product_fold(factors);
}

Graph complete_graph(int n) {
    if (n < 1) throw invalid_input("complete_graph: n must be >= 1");
    EdgeSet edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
    }
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw invalid_input("cycle_graph: n must be >= 3");
    EdgeSet edges;
    for (Vertex k = 0; k < n; ++k) edges.push_back(make_edge(k, (k + 1) % n));
    return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
    if (leaves < 0) throw invalid_input("star_graph: negative leaf count");
    EdgeSet edges;
    for (Vertex k = 1; k <= leaves; ++k) edges.push_back({0, k});
    return Graph(leaves + 1, std::move(edges));
}

SeedInstance seed_cube_ladder(int n) {
    if (n < 1) throw invalid_input("seed_cube_ladder: n must be >= 1");
    using namespace drawings;
    Graph g = grid({{1, 1, n}});
    std::vector<Color> colors(g.vertex_count());
    for (int column = 0; column <= n; ++column) {
        const int pattern = column == 0 ? 0 : (column % 2 == 1 ? 1 : 2);
        for (std::size_t k = 0; k < kLadderCorners.size(); ++k) {
            colors[4 * column + kLadderCornerId[k]] = drawn(kLadderDrawing[k][pattern]);
        }
    }
    return SeedInstance::verified(std::move(g), TwoColoring(std::move(colors)), ladder_marks_quartet());
}

SeedInstance seed_grid(int m, int n) {
    if (m < 2 || n < 3) throw invalid_input("seed_grid: need m >= 2 and n >= 3");
    Graph g = grid({{m, n}});
    const int columns = m + 1;
    auto id = [columns](int row, int col) { return row * columns + col; };
    std::vector<Color> colors(g.vertex_count(), Color::blue);
    Quartet q;
    if (n == 3) {
        for (int col = 0; col <= m; ++col) colors[id(0, col)] = Color::red;
        colors[id(1, 0)] = Color::red;
        for (int col = 0; col < m; ++col) colors[id(2, col)] = Color::red;
        q = {.i_red = id(0, m), .i_blue = id(3, 0), .j_red = id(0, 1), .j_blue = id(2, m)};
    } else {
        for (int row = 0; row <= n; ++row) {
            for (int col = 0; col <= m; ++col) {
                bool red = col == 0 || (col < m && row % 2 == 1);
                colors[id(row, col)] = red ? Color::red : Color::blue;
            }
        }
        if (n % 2 == 1) {
            q = {.i_red = id(0, 0), .i_blue = id(n, m), .j_red = id(2, 0), .j_blue = id(3, m)};
        } else {
            colors[id(0, 0)] = Color::blue;
            q = {.i_red = id(n, 0), .i_blue = id(0, 0), .j_red = id(2, 0), .j_blue = id(1, m)};
        }
    }
    return SeedInstance::verified(std::move(g), TwoColoring(std::move(colors)), q);
}

Graph counterexample_graph() {
    EdgeSet edges;
    for (Vertex k = 0; k < 3; ++k) {
        edges.push_back({k, k + 1});
        edges.push_back({k + 4, k + 5});
    }
    for (Vertex a = 0; a < 4; ++a) {
        for (Vertex b = 4; b < 8; ++b) edges.push_back({a, b});
    }
    return Graph(8, std::move(edges));
}

std::vector<Graph> free_trees(int n) {
    if (n < 1 || n > 8) throw invalid_input("free_trees: n must be in 1..8");
    if (n == 1) return {Graph(1, EdgeSet{})};
    if (n == 2) return {Graph(2, {{0, 1}})};
    std::map<std::string, Graph> classes;
    std::vector<int> seq(n - 2, 0);
    while (true) {
        Graph t = tree_from_pruefer(seq, n);
        classes.try_emplace(canonical_form(t), t);
        int k = n - 3;
        while (k >= 0 && seq[k] == n - 1) seq[k--] = 0;
        if (k < 0) break;
        ++seq[k];
    }
    std::vector<Graph> out;
    for (auto& [code, t] : classes) out.push_back(std::move(t));
    return out;
}

}  // namespace dualham
