#ifndef URMATCH_MAXIMUM_MATCHING_HPP
#define URMATCH_MAXIMUM_MATCHING_HPP

#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "urmatch/matching.hpp"

namespace urmatch {

namespace detail {

// Hopcroft-Karp over an adjacency-list view. X vertices are processed in
// index order and neighbor lists are sorted, so the result is deterministic
// (lowest-index augmentation wins ties).
class HopcroftKarp {
public:
    explicit HopcroftKarp(const std::vector<std::vector<std::size_t>>& adj_x, std::size_t y_count)
        : adj_(adj_x),
          pair_x_(adj_x.size(), no_vertex),
          pair_y_(y_count, no_vertex),
          dist_(adj_x.size(), kInf) {}

    std::size_t run() {
        std::size_t matched = 0;
        while (bfs()) {
            for (std::size_t x = 0; x < adj_.size(); ++x)
                if (pair_x_[x] == no_vertex && dfs(x)) ++matched;
        }
        return matched;
    }

    const std::vector<std::size_t>& pair_x() const { return pair_x_; }

private:
    static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

    // Layer the graph from free X vertices; true if some free Y is reachable.
    bool bfs() {
        std::queue<std::size_t> q;
        for (std::size_t x = 0; x < adj_.size(); ++x) {
            if (pair_x_[x] == no_vertex) {
                dist_[x] = 0;
                q.push(x);
            } else {
                dist_[x] = kInf;
            }
        }
        found_ = kInf;
        while (!q.empty()) {
            std::size_t x = q.front();
            q.pop();
            if (dist_[x] >= found_) continue;
            for (std::size_t y : adj_[x]) {
                std::size_t nx = pair_y_[y];
                if (nx == no_vertex) {
                    if (found_ == kInf) found_ = dist_[x] + 1;
                } else if (dist_[nx] == kInf) {
                    dist_[nx] = dist_[x] + 1;
                    q.push(nx);
                }
            }
        }
        return found_ != kInf;
    }

    // Depth is bounded by the current phase's layer count.
    bool dfs(std::size_t x) {
        for (std::size_t y : adj_[x]) {
            std::size_t nx = pair_y_[y];
            bool extends = (nx == no_vertex) ? (dist_[x] + 1 == found_)
                                             : (dist_[nx] == dist_[x] + 1 && dfs(nx));
            if (extends) {
                pair_x_[x] = y;
                pair_y_[y] = x;
                return true;
            }
        }
        dist_[x] = kInf;
        return false;
    }

    const std::vector<std::vector<std::size_t>>& adj_;
    std::vector<std::size_t> pair_x_;
    std::vector<std::size_t> pair_y_;
    std::vector<std::size_t> dist_;
    std::size_t found_ = kInf;
};

} // namespace detail

// Maximum-cardinality matching, O(E * sqrt(V)). Deterministic for a given
// graph value.
inline Matching maximum_matching(const BipartiteGraph& g) {
    std::vector<std::vector<std::size_t>> adj(g.x_count());
    for (std::size_t x = 0; x < g.x_count(); ++x) adj[x] = g.neighbors_of_x(x);
    detail::HopcroftKarp hk(adj, g.y_count());
    hk.run();
    std::vector<Edge> pairs;
    for (std::size_t x = 0; x < g.x_count(); ++x)
        if (hk.pair_x()[x] != no_vertex) pairs.push_back({x, hk.pair_x()[x]});
    return Matching::from_pairs(g, std::move(pairs));
}

} // namespace urmatch

#endif // URMATCH_MAXIMUM_MATCHING_HPP
