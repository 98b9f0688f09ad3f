#pragma once

// Definition-level brute force for small graphs. Deliberately shares no code
// with the library: plain edge lists, bitmask vertex sets, a throwaway
// union-find. Slow, obvious, and only meant for n <= ~16.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

struct G {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

// Components of the spanning subgraph keeping the edges whose bit is clear in
// `removed` (bit k = edges[k]).
inline int components_without(const G& g, std::uint64_t removed) {
    DSU d(g.n);
    int comps = g.n;
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        if (removed >> k & 1) continue;
        if (d.unite(g.edges[k].first, g.edges[k].second)) --comps;
    }
    return comps;
}

inline bool connected(const G& g) { return g.n > 0 && components_without(g, 0) == 1; }

// Minimal disconnecting set: removing it disconnects, putting any one edge
// back reconnects. Larger put-backs reconnect too, since adding edges never
// splits a component.
inline bool is_bond(const G& g, std::uint64_t b) {
    if (components_without(g, b) < 2) return false;
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        if ((b >> k & 1) && components_without(g, b & ~(std::uint64_t{1} << k)) != 1) return false;
    }
    return true;
}

// Does the vertex set `mask` induce a tree?
inline bool induces_tree(const G& g, std::uint32_t mask) {
    if (mask == 0) return false;
    int k = __builtin_popcount(mask);
    DSU d(g.n);
    int inside = 0;
    int comps = k;
    for (auto [u, v] : g.edges) {
        if ((mask >> u & 1) && (mask >> v & 1)) {
            ++inside;
            if (!d.unite(u, v)) return false;
            --comps;
        }
    }
    return comps == 1 && inside == k - 1;
}

// Bit v set = v is red.
inline bool is_ham_partition(const G& g, std::uint32_t red) {
    std::uint32_t all = g.n == 32 ? ~0u : (1u << g.n) - 1;
    return induces_tree(g, red) && induces_tree(g, all & ~red);
}

// Hamiltonian bonds by trying every edge subset of the right size.
inline bool has_hamiltonian_bond(const G& g) {
    const int m = static_cast<int>(g.edges.size());
    const int target = m - g.n + 2;
    if (target < 1 || m > 30) return false;
    for (std::uint64_t b = 1; b < (std::uint64_t{1} << m); ++b) {
        if (__builtin_popcountll(b) == target && is_bond(g, b)) return true;
    }
    return false;
}

// Unordered partitions into two induced trees, counted with vertex 0 red.
inline int count_ham_partitions(const G& g) {
    int count = 0;
    for (std::uint32_t red = 1; red < (1u << g.n); red += 2) count += is_ham_partition(g, red);
    return count;
}

}  // namespace oracle
