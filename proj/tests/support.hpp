#pragma once

#include <string>
#include <vector>

#include "dualham/coloring.hpp"
#include "dualham/generators.hpp"
#include "dualham/graph.hpp"
#include "dualham/solver.hpp"
#include "oracle.hpp"

namespace support {

inline oracle::G to_oracle(const dualham::Graph& g) {
    oracle::G out{g.vertex_count(), {}};
    for (const auto& e : g.edges()) out.edges.emplace_back(e.u, e.v);
    return out;
}

inline dualham::TwoColoring from_mask(int n, std::uint32_t red) {
    std::vector<dualham::Color> c(n);
    for (int v = 0; v < n; ++v) c[v] = (red >> v & 1) ? dualham::Color::red : dualham::Color::blue;
    return dualham::TwoColoring(std::move(c));
}

inline std::uint32_t red_mask(const dualham::TwoColoring& c) {
    std::uint32_t m = 0;
    for (int v = 0; v < c.size(); ++v) {
        if (c[v] == dualham::Color::red) m |= 1u << v;
    }
    return m;
}

// All trees up to 7 vertices, cycles up to 8, Q2, Q3, K4, K5, the
// counterexample and grid([2,3]).
inline std::vector<dualham::NamedGraph> corpus() {
    using namespace dualham;
    std::vector<NamedGraph> out;
    for (int n = 1; n <= 7; ++n) {
        int k = 0;
        for (auto& t : free_trees(n)) out.push_back({"tree" + std::to_string(n) + "." + std::to_string(k++), t});
    }
    for (int n = 3; n <= 8; ++n) out.push_back({"cycle" + std::to_string(n), cycle_graph(n)});
    out.push_back({"Q2", hypercube(2)});
    out.push_back({"Q3", hypercube(3)});
    out.push_back({"K4", complete_graph(4)});
    out.push_back({"K5", complete_graph(5)});
    out.push_back({"counterexample", counterexample_graph()});
    out.push_back({"grid2x3", grid({{2, 3}})});
    return out;
}

}  // namespace support
