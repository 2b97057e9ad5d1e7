#ifndef URMATCH_ORACLE_HPP
#define URMATCH_ORACLE_HPP

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "urmatch/matching.hpp"

// Brute-force ground truth, deliberately independent of the digraph
// reduction: these routines work on the raw graph by definitionally distinct
// algorithms and share no code with bd_digraph / ur_analysis.

namespace urmatch {

struct OracleBudget {
    std::size_t max_edges = 24;                    // cap for exhaustive routines
    std::size_t max_nodes = 20;                    // cap for subset searches
    std::chrono::milliseconds time_cap{10000};     // wall-clock guard per instance
};

namespace detail {

class OracleClock {
public:
    explicit OracleClock(std::chrono::milliseconds cap)
        : deadline_(std::chrono::steady_clock::now() + cap) {}

    void tick(const char* where) {
        if (++steps_ % 1024 == 0 && std::chrono::steady_clock::now() > deadline_)
            throw budget_exceeded(std::string(where) + ": time cap exceeded");
    }

private:
    std::chrono::steady_clock::time_point deadline_;
    std::size_t steps_ = 0;
};

inline std::size_t count_pm_recurse(const BipartiteGraph& g, std::size_t x,
                                    std::vector<bool>& used_y, OracleClock& clock) {
    if (x == g.x_count()) return 1;
    std::size_t total = 0;
    for (std::size_t y : g.neighbors_of_x(x)) {
        if (used_y[y]) continue;
        clock.tick("count_perfect_matchings");
        used_y[y] = true;
        total += count_pm_recurse(g, x + 1, used_y, clock);
        used_y[y] = false;
    }
    return total;
}

} // namespace detail

// Exact perfect-matching count by backtracking that assigns X vertices in
// index order. 0 whenever the sides differ.
inline std::size_t count_perfect_matchings(const BipartiteGraph& g, const OracleBudget& budget = {}) {
    if (g.edge_count() > budget.max_edges)
        throw budget_exceeded("count_perfect_matchings: " + std::to_string(g.edge_count()) +
                              " edges exceed the cap of " + std::to_string(budget.max_edges));
    if (g.x_count() != g.y_count()) return 0;
    detail::OracleClock clock(budget.time_cap);
    std::vector<bool> used_y(g.y_count(), false);
    return detail::count_pm_recurse(g, 0, used_y, clock);
}

namespace detail {

// DFS over simple alternating walks anchored at a saturated X vertex. The
// walk leaves an X vertex by a non-matching edge and leaves a Y vertex by its
// matching edge; it closes into an alternating cycle when a non-matching edge
// returns to the anchor. Restricting X vertices to indices >= the anchor is a
// symmetry break: a cycle is found from its smallest X vertex.
struct AltCycleSearch {
    const BipartiteGraph& g;
    const Matching& m;
    OracleClock& clock;
    std::vector<bool> on_path_x;
    std::vector<std::size_t> path_x; // visited X vertices in walk order

    bool dfs(std::size_t x, std::size_t anchor) {
        clock.tick("find_alternating_cycle");
        on_path_x[x] = true;
        path_x.push_back(x);
        const std::size_t my = *m.partner_of_x(x);
        for (std::size_t y : g.neighbors_of_x(x)) {
            if (y == my) continue; // must leave by a non-matching edge
            if (!m.saturates_y(y)) continue;
            std::size_t nx = *m.partner_of_y(y);
            if (nx == anchor) return true;
            if (nx < anchor || on_path_x[nx]) continue;
            if (dfs(nx, anchor)) return true;
        }
        on_path_x[x] = false;
        path_x.pop_back();
        return false;
    }
};

} // namespace detail

// An even simple cycle alternating between matching and non-matching edges,
// or nullopt when none exists (Golumbic's criterion: the matching is uniquely
// restricted iff this returns nullopt). The returned sequence starts with a
// matching edge; consecutive edges share a vertex and it wraps around.
inline std::optional<std::vector<Edge>> find_alternating_cycle(const BipartiteGraph& g,
                                                               const Matching& m,
                                                               const OracleBudget& budget = {}) {
    if (g.edge_count() > budget.max_edges)
        throw budget_exceeded("find_alternating_cycle: " + std::to_string(g.edge_count()) +
                              " edges exceed the cap of " + std::to_string(budget.max_edges));
    detail::OracleClock clock(budget.time_cap);
    detail::AltCycleSearch search{g, m, clock, std::vector<bool>(g.x_count(), false), {}};
    for (const Edge& anchor_edge : m.pairs()) {
        search.path_x.clear();
        if (!search.dfs(anchor_edge.x, anchor_edge.x)) continue;
        // Unwind the walk into the edge sequence convention:
        // M(x0,y0), (x0,y1), M(x1,y1), (x1,y2), ..., (x_{k-1}, y0).
        std::vector<Edge> cycle;
        const auto& xs = search.path_x;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            std::size_t x = xs[i];
            std::size_t next_y = *m.partner_of_x(xs[(i + 1) % xs.size()]);
            cycle.push_back({x, *m.partner_of_x(x)});
            cycle.push_back({x, next_y});
        }
        return cycle;
    }
    return std::nullopt;
}

} // namespace urmatch

#endif // URMATCH_ORACLE_HPP
