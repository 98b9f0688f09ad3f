#include "dualham/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <thread>

#include "dualham/errors.hpp"

namespace dualham {

namespace {

using Clock = std::chrono::steady_clock;

template <int W>
struct Bits {
    std::array<std::uint64_t, W> words{};

    void set(int v) { words[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool test(int v) const { return (words[v >> 6] >> (v & 63)) & 1U; }
    bool any() const {
        for (auto w : words) {
            if (w) return true;
        }
        return false;
    }
    bool intersects(const Bits& other) const {
        for (int k = 0; k < W; ++k) {
            if (words[k] & other.words[k]) return true;
        }
        return false;
    }
    template <typename F>
    void for_each(F&& f) const {
        for (int k = 0; k < W; ++k) {
            for (auto w = words[k]; w != 0; w &= w - 1) f(k * 64 + std::countr_zero(w));
        }
    }
};

// Shared by all workers of one search.
struct BudgetState {
    std::optional<Clock::time_point> deadline;
    std::optional<std::uint64_t> node_limit;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> leaves{0};
    std::atomic<bool> aborted{false};

    explicit BudgetState(const Budget& b) {
        if (b.wall) deadline = Clock::now() + *b.wall;
        node_limit = b.nodes;
    }

    // False once the budget is spent.
    bool charge() {
        const auto n = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (node_limit && n > *node_limit) aborted.store(true, std::memory_order_relaxed);
        if (deadline && (n & 255U) == 0 && Clock::now() > *deadline) {
            aborted.store(true, std::memory_order_relaxed);
        }
        return !aborted.load(std::memory_order_relaxed);
    }
};

// Greedy: highest degree first, then always the highest-degree vertex
// adjacent to the placed prefix (ties to the lower id), so classes grow
// connected and closed components show up early.
VertexList search_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<bool> placed(n, false);
    std::vector<bool> frontier(n, false);
    VertexList order;
    order.reserve(n);
    while (static_cast<int>(order.size()) < n) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v]) continue;
            if (best == -1) {
                best = v;
                continue;
            }
            auto key = [&](Vertex x) { return std::pair{static_cast<int>(frontier[x]), g.degree(x)}; };
            if (key(v) > key(best)) best = v;
        }
        placed[best] = true;
        order.push_back(best);
        for (Vertex w : g.neighbors(best)) frontier[w] = true;
    }
    return order;
}

template <int W>
class Search {
public:
    Search(const Graph& g, const VertexList& order, BudgetState& budget)
        : g_(g), order_(order), budget_(budget), n_(g.vertex_count()), color_(n_, -1), parent_(n_),
          size_(n_, 1), stamp_(n_, 0), open_(n_, 0), adj_(n_) {
        for (Vertex v = 0; v < n_; ++v) {
            parent_[v] = v;
            uncolored_.set(v);
            for (Vertex w : g.neighbors(v)) adj_[v].set(w);
        }
    }

    // Fixes the first prefix.size() vertices of the order, then explores.
    // visit(coloring) returns false to stop. Returns false if stopped early.
    template <typename Visit>
    bool run(std::span<const int> prefix, Visit&& visit) {
        std::vector<std::size_t> marks;
        bool feasible = true;
        std::size_t fixed = 0;
        for (; fixed < prefix.size(); ++fixed) {
            marks.push_back(history_.size());
            if (!assign(order_[fixed], prefix[fixed])) {
                ++fixed;
                feasible = false;
                break;
            }
        }
        bool keep_going = true;
        if (feasible) keep_going = dfs(prefix.size(), visit);
        while (fixed > 0) {
            --fixed;
            undo(marks[fixed], order_[fixed]);
        }
        return keep_going;
    }

private:
    int find(int v) const {
        while (parent_[v] != v) v = parent_[v];
        return v;
    }

    bool unite(int a, int b) {
        int ra = find(a);
        int rb = find(b);
        if (ra == rb) return false;
        if (size_[ra] < size_[rb]) std::swap(ra, rb);
        parent_[rb] = ra;
        size_[ra] += size_[rb];
        history_.push_back(rb);
        return true;
    }

    void undo(std::size_t mark, Vertex v) {
        while (history_.size() > mark) {
            int child = history_.back();
            history_.pop_back();
            int root = parent_[child];
            size_[root] -= size_[child];
            parent_[child] = child;
        }
        cls_[color_[v]].reset(v);
        uncolored_.set(v);
        color_[v] = -1;
    }

    // False when the assignment creates a cycle or a stranded component. The
    // caller undoes either way.
    bool assign(Vertex v, int k) {
        color_[v] = k;
        cls_[k].set(v);
        uncolored_.reset(v);
        for (Vertex w : g_.neighbors(v)) {
            if (color_[w] == k && !unite(v, w)) return false;
        }
        return classes_ok();
    }

    bool classes_ok() {
        for (int k = 0; k < 2; ++k) {
            ++clock_;
            int comps = 0;
            int open = 0;
            cls_[k].for_each([&](int m) {
                int r = find(m);
                if (stamp_[r] != clock_) {
                    stamp_[r] = clock_;
                    open_[r] = 0;
                    ++comps;
                }
                if (!open_[r] && adj_[m].intersects(uncolored_)) {
                    open_[r] = 1;
                    ++open;
                }
            });
            if (comps >= 2 && open < comps) return false;
        }
        return true;
    }

    template <typename Visit>
    bool dfs(std::size_t pos, Visit& visit) {
        if (!budget_.charge()) return false;
        if (static_cast<int>(pos) == n_) {
            budget_.leaves.fetch_add(1, std::memory_order_relaxed);
            // Cycles and split classes are already excluded; only emptiness is left.
            if (!cls_[0].any() || !cls_[1].any()) return true;
            std::vector<Color> colors(n_);
            for (Vertex v = 0; v < n_; ++v) colors[v] = static_cast<Color>(color_[v]);
            return visit(TwoColoring(std::move(colors)));
        }
        const Vertex v = order_[pos];
        const int choices = v == 0 ? 1 : 2;
        for (int k = 0; k < choices; ++k) {
            const auto mark = history_.size();
            bool ok = assign(v, k);
            bool keep_going = !ok || dfs(pos + 1, visit);
            undo(mark, v);
            if (!keep_going) return false;
        }
        return true;
    }

    const Graph& g_;
    const VertexList& order_;
    BudgetState& budget_;
    int n_;
    std::vector<int> color_;
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
    std::vector<std::uint64_t> stamp_;
    std::vector<char> open_;
    std::uint64_t clock_ = 0;
    std::vector<Bits<W>> adj_;
    std::array<Bits<W>, 2> cls_{};
    Bits<W> uncolored_{};
};

void check_searchable(const Graph& g, const SolverOptions& options, const char* op) {
    if (!is_connected(g)) throw invalid_input(std::string(op) + ": graph is disconnected");
    if (g.vertex_count() > kMaxSearchVertices) {
        throw invalid_input(std::string(op) + ": more than " + std::to_string(kMaxSearchVertices) + " vertices");
    }
    if (g.vertex_count() > options.vertex_cap && !options.budget.limited()) {
        throw invalid_input(std::string(op) + ": " + std::to_string(g.vertex_count()) +
                            " vertices exceeds the solver cap of " + std::to_string(options.vertex_cap) +
                            " (set a budget to search anyway)");
    }
}

void verify_witness(const Graph& g, const TwoColoring& c) {
    if (!is_hamiltonian_coloring(g, c)) {
        throw verification_failure("solver produced a coloring that does not verify: " + c.to_string());
    }
}

// Runs fn(Search<W>&) with W picked from the vertex count.
template <typename Fn>
void with_search(const Graph& g, const VertexList& order, BudgetState& budget, Fn&& fn) {
    if (g.vertex_count() <= 64) {
        Search<1> s(g, order, budget);
        fn(s);
    } else {
        Search<2> s(g, order, budget);
        fn(s);
    }
}

SearchStats stats_of(const BudgetState& budget, Clock::time_point start) {
    SearchStats st;
    st.nodes = budget.nodes.load();
    st.colorings_enumerated = budget.leaves.load();
    st.elapsed = Clock::now() - start;
    return st;
}

}  // namespace

int vertex_cap_from_env() {
    const char* raw = std::getenv("DUALHAM_SOLVER_CAP");
    if (raw == nullptr) return kDefaultVertexCap;
    int value = 0;
    auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
    if (ec != std::errc{} || *ptr != '\0' || value <= 0) return kDefaultVertexCap;
    return std::min(value, kMaxSearchVertices);
}

std::string_view status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::found: return "found";
        case SolveStatus::none_exhaustive: return "none-exhaustive";
        case SolveStatus::aborted_budget: return "aborted-budget";
    }
    return "unknown";
}

Enumeration enumerate_hamiltonian_colorings(const Graph& g, const SolverOptions& options) {
    check_searchable(g, options, "enumerate_hamiltonian_colorings");
    const auto start = Clock::now();
    BudgetState budget(options.budget);
    const auto order = search_order(g);
    const int n = g.vertex_count();

    // Split the first `depth` vertices of the order into independent prefixes.
    int depth = 0;
    if (options.threads > 1) {
        while (depth < n && (1 << depth) < 4 * options.threads && depth < 16) ++depth;
    }
    std::vector<std::vector<int>> prefixes;
    for (int bits = 0; bits < (1 << depth); ++bits) {
        std::vector<int> prefix(depth);
        bool ok = true;
        for (int k = 0; k < depth; ++k) {
            prefix[k] = (bits >> k) & 1;
            if (order[k] == 0 && prefix[k] != 0) ok = false;
        }
        if (ok) prefixes.push_back(std::move(prefix));
    }

    std::vector<std::vector<TwoColoring>> found(prefixes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        with_search(g, order, budget, [&](auto& search) {
            for (auto task = next.fetch_add(1); task < prefixes.size(); task = next.fetch_add(1)) {
                auto& sink = found[task];
                search.run(prefixes[task], [&](TwoColoring c) {
                    sink.push_back(std::move(c));
                    return true;
                });
            }
        });
    };
    const int workers = std::max(1, std::min<int>(options.threads, static_cast<int>(prefixes.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    Enumeration out;
    for (auto& part : found) {
        for (auto& c : part) out.colorings.push_back(std::move(c));
    }
    std::sort(out.colorings.begin(), out.colorings.end());
    for (const auto& c : out.colorings) verify_witness(g, c);
    out.complete = !budget.aborted.load();
    out.stats = stats_of(budget, start);
    return out;
}

SolveResult is_dual_hamiltonian(const Graph& g, const SolverOptions& options) {
    check_searchable(g, options, "is_dual_hamiltonian");
    const auto start = Clock::now();
    BudgetState budget(options.budget);
    const auto order = search_order(g);
    SolveResult result;
    with_search(g, order, budget, [&](auto& search) {
        search.run({}, [&](TwoColoring c) {
            result.coloring = std::move(c);
            return false;
        });
    });
    if (result.coloring) {
        verify_witness(g, *result.coloring);
        result.status = SolveStatus::found;
    } else {
        result.status = budget.aborted.load() ? SolveStatus::aborted_budget : SolveStatus::none_exhaustive;
    }
    result.stats = stats_of(budget, start);
    return result;
}

std::optional<Quartet> find_quartet(const Graph& g, const TwoColoring& c) {
    if (!is_hamiltonian_coloring(g, c)) throw invalid_input("find_quartet: coloring is not hamiltonian");
    const int n = g.vertex_count();
    const auto reds = color_class(g, c, Color::red);
    const auto blues = color_class(g, c, Color::blue);

    // Q2 depends on I only.
    std::vector<signed char> q2(static_cast<std::size_t>(n) * n, -1);
    auto q2_holds = [&](Vertex ir, Vertex ib) {
        auto& slot = q2[static_cast<std::size_t>(ir) * n + ib];
        if (slot == -1) {
            std::array<Vertex, 2> i{ir, ib};
            slot = is_hamiltonian_coloring(g, flip(c, i)) ? 1 : 0;
        }
        return slot == 1;
    };

    // Q3's component split depends on J only: per-vertex component labels of
    // each class of C Δ J, or nothing if a class is not a two-tree forest.
    struct Split {
        bool two_trees = false;
        std::vector<int> label;  // component index within its class
    };
    std::vector<std::optional<Split>> splits(static_cast<std::size_t>(n) * n);
    auto split_for = [&](Vertex jr, Vertex jb) -> const Split& {
        auto& slot = splits[static_cast<std::size_t>(jr) * n + jb];
        if (!slot) {
            Split s;
            std::array<Vertex, 2> j{jr, jb};
            auto flipped = flip(c, j);
            s.label.assign(n, -1);
            s.two_trees = true;
            for (Color k : {Color::red, Color::blue}) {
                auto sub = induced_subgraph(g, color_class(g, flipped, k));
                auto label = component_labels(sub.graph);
                int comps = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
                if (comps != 2 || !is_forest(sub.graph)) s.two_trees = false;
                for (std::size_t local = 0; local < label.size(); ++local) s.label[sub.original[local]] = label[local];
            }
            slot = std::move(s);
        }
        return *slot;
    };

    for (Vertex ir : reds) {
        for (Vertex ib : blues) {
            if (!q2_holds(ir, ib)) continue;
            for (Vertex jr : reds) {
                if (jr == ir) continue;
                for (Vertex jb : blues) {
                    if (jb == ib) continue;
                    const Split& s = split_for(jr, jb);
                    if (!s.two_trees) continue;
                    // Under C Δ J the red class meets I ∪ J exactly in i_red
                    // and j_blue, the blue class in i_blue and j_red.
                    if (s.label[ir] == s.label[jb] || s.label[ib] == s.label[jr]) continue;
                    Quartet q{ir, ib, jr, jb};
                    if (!is_quartet(g, c, q).holds()) {
                        throw verification_failure("find_quartet: candidate failed full verification");
                    }
                    return q;
                }
            }
        }
    }
    return std::nullopt;
}

SolveResult find_quartet_coloring(const Graph& g, const SolverOptions& options) {
    auto all = enumerate_hamiltonian_colorings(g, options);
    SolveResult result;
    result.stats = all.stats;
    for (const auto& c : all.colorings) {
        if (auto q = find_quartet(g, c)) {
            result.status = SolveStatus::found;
            result.coloring = c;
            result.quartet = *q;
            return result;
        }
    }
    result.status = all.complete ? SolveStatus::none_exhaustive : SolveStatus::aborted_budget;
    return result;
}

std::optional<VertexList> density_check(const Graph& g, int subset_cap) {
    auto violates = [](long long h, long long e) { return h >= 2 && 4 * e > 4 * h - 8 + h * h; };
    const int n = g.vertex_count();
    std::optional<VertexList> best;
    if (violates(n, g.edge_count())) {
        VertexList all(n);
        for (Vertex v = 0; v < n; ++v) all[v] = v;
        best = std::move(all);
    }
    if (n > subset_cap || n > 24) return best;

    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= 1U << e.v;
        adj[e.v] |= 1U << e.u;
    }
    // By size, then lexicographically by sorted members.
    for (int size = 2; size <= n; ++size) {
        std::optional<VertexList> found;
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
            if (std::popcount(mask) != size) continue;
            long long twice = 0;
            for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
                twice += std::popcount(adj[std::countr_zero(rest)] & mask);
            }
            if (!violates(size, twice / 2)) continue;
            VertexList members;
            for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) members.push_back(std::countr_zero(rest));
            if (!found || members < *found) found = std::move(members);
        }
        if (found) return found;
    }
    return best;
}

std::vector<CensusRow> census(std::span<const NamedGraph> graphs, const SolverOptions& options) {
    std::vector<CensusRow> rows;
    for (const auto& entry : graphs) {
        CensusRow row;
        row.id = entry.id;
        row.vertex_count = entry.graph.vertex_count();
        row.edge_count = entry.graph.edge_count();
        row.density_violation = density_check(entry.graph);
        row.dual = is_dual_hamiltonian(entry.graph, options);
        if (row.dual.status == SolveStatus::found) {
            row.quartet = find_quartet_coloring(entry.graph, options);
        } else {
            row.quartet.status = row.dual.status;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace dualham
