#pragma once

// Named graph families and the explicit seed instances.
//
// Paths follow the edge-count convention: path(n) has n edges and n + 1
// vertices. Grids are left-folded products of paths, so grid({m, n}) has
// m + 1 columns and n + 1 rows and vertex id row * (m + 1) + col.

#include <vector>

#include "dualham/graph.hpp"
#include "dualham/lift.hpp"

namespace dualham {

inline constexpr int kDefaultHypercubeCap = 20;

// Rooted at 0. Throws invalid_input for n < 0.
Tree path(int n);

// Vertex ids are the binary encodings of {0,1}^n, which coincide with the
// flat ids of the left-folded product P1 × ... × P1.
Graph hypercube(int n, int cap = kDefaultHypercubeCap);

struct GridSpec {
    std::vector<int> dims;  // edge count of each path factor
};

Graph grid(const GridSpec& spec);

Graph complete_graph(int n);
Graph cycle_graph(int n);
// Center 0, leaves 1..k.
Graph star_graph(int leaves);

// P1 × P1 × Pn with the periodic ladder coloring: column 0 as drawn, odd
// columns like column 1, even columns from 2 on like column 2. I sits in
// column 1, J in column 0.
SeedInstance seed_cube_ladder(int n);

// P_m × P_n, m >= 2, n >= 3. For n >= 4: first column red, last column
// blue, interior rows alternating (row 0 blue). For even n the top-left
// corner is blue as well. n = 3 uses a comb: top row red plus the left end
// of row 1 and all of row 2 but its last cell.
SeedInstance seed_grid(int m, int n);

// Two 4-vertex paths (0-1-2-3 and 4-5-6-7) with all 16 edges between them.
Graph counterexample_graph();

// One representative per isomorphism class of trees on n vertices, 1 <= n <= 8,
// in a deterministic order.
std::vector<Graph> free_trees(int n);

}  // namespace dualham
