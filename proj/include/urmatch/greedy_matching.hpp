#ifndef URMATCH_GREEDY_MATCHING_HPP
#define URMATCH_GREEDY_MATCHING_HPP

#include <cstddef>
#include <vector>

#include "urmatch/maximum_matching.hpp"

namespace urmatch {

// Greedy matching: degree-1 reduction, then completion to maximum cardinality.
//
// While some vertex has degree 1 in the remaining graph, its unique incident
// edge is forced and both endpoints removed. The residue is completed to
// maximum cardinality with Hopcroft-Karp on the surviving vertices, so the
// result is always a maximum matching of g (forcing a degree-1 vertex's edge
// never loses cardinality).
//
// Processing discipline, fixed for reproducibility: degree-1 vertices sit on
// a stack; the initial scan pushes them so that lower-index vertices (X side
// before Y) pop first, and vertices newly exposed at degree 1 are pushed in
// ascending index order, so the most recently exposed pops first.
inline Matching greedy_matching(const BipartiteGraph& g) {
    std::vector<bool> alive_x(g.x_count(), true), alive_y(g.y_count(), true);
    std::vector<std::size_t> deg_x(g.x_count()), deg_y(g.y_count());
    for (std::size_t x = 0; x < g.x_count(); ++x) deg_x[x] = g.neighbors_of_x(x).size();
    for (std::size_t y = 0; y < g.y_count(); ++y) deg_y[y] = g.neighbors_of_y(y).size();

    std::vector<VertexRef> stack;
    for (std::size_t y = g.y_count(); y-- > 0;)
        if (deg_y[y] == 1) stack.push_back({Side::Y, y});
    for (std::size_t x = g.x_count(); x-- > 0;)
        if (deg_x[x] == 1) stack.push_back({Side::X, x});

    std::vector<Edge> forced;
    auto remove_pair = [&](std::size_t x, std::size_t y) {
        alive_x[x] = false;
        alive_y[y] = false;
        for (std::size_t ny : g.neighbors_of_x(x)) {
            if (!alive_y[ny]) continue;
            if (--deg_y[ny] == 1) stack.push_back({Side::Y, ny});
        }
        for (std::size_t nx : g.neighbors_of_y(y)) {
            if (!alive_x[nx]) continue;
            if (--deg_x[nx] == 1) stack.push_back({Side::X, nx});
        }
    };

    while (!stack.empty()) {
        VertexRef v = stack.back();
        stack.pop_back();
        if (v.side == Side::X) {
            if (!alive_x[v.index] || deg_x[v.index] != 1) continue;
            for (std::size_t y : g.neighbors_of_x(v.index))
                if (alive_y[y]) {
                    forced.push_back({v.index, y});
                    remove_pair(v.index, y);
                    break;
                }
        } else {
            if (!alive_y[v.index] || deg_y[v.index] != 1) continue;
            for (std::size_t x : g.neighbors_of_y(v.index))
                if (alive_x[x]) {
                    forced.push_back({x, v.index});
                    remove_pair(x, v.index);
                    break;
                }
        }
    }

    // Complete the residue to maximum cardinality.
    std::vector<std::size_t> x_to_sub(g.x_count(), no_vertex);
    std::vector<std::size_t> sub_to_x, y_to_sub(g.y_count(), no_vertex), sub_to_y;
    for (std::size_t x = 0; x < g.x_count(); ++x)
        if (alive_x[x]) {
            x_to_sub[x] = sub_to_x.size();
            sub_to_x.push_back(x);
        }
    for (std::size_t y = 0; y < g.y_count(); ++y)
        if (alive_y[y]) {
            y_to_sub[y] = sub_to_y.size();
            sub_to_y.push_back(y);
        }
    std::vector<std::vector<std::size_t>> adj(sub_to_x.size());
    for (std::size_t x = 0; x < g.x_count(); ++x) {
        if (!alive_x[x]) continue;
        for (std::size_t y : g.neighbors_of_x(x))
            if (alive_y[y]) adj[x_to_sub[x]].push_back(y_to_sub[y]);
    }
    detail::HopcroftKarp hk(adj, sub_to_y.size());
    hk.run();

    std::vector<Edge> pairs = forced;
    for (std::size_t sx = 0; sx < sub_to_x.size(); ++sx)
        if (hk.pair_x()[sx] != no_vertex) pairs.push_back({sub_to_x[sx], sub_to_y[hk.pair_x()[sx]]});
    return Matching::from_pairs(g, std::move(pairs));
}

} // namespace urmatch

#endif // URMATCH_GREEDY_MATCHING_HPP
