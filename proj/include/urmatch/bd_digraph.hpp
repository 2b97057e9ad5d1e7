#ifndef URMATCH_BD_DIGRAPH_HPP
#define URMATCH_BD_DIGRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "urmatch/matching.hpp"
#include "urmatch/maximum_matching.hpp"

namespace urmatch {

// The matching-to-digraph reduction: one node per matching edge (numbered by
// the edge's position in the sorted pair list), and an arc i -> j exactly
// when the graph has a non-matching edge from node i's X endpoint to node j's
// Y endpoint. Self-loops are impossible (that edge would be the matching
// edge itself) and the matching is uniquely restricted iff this digraph is
// acyclic.
class BDDigraph {
public:
    BDDigraph() = default;

    std::size_t node_count() const { return node_edges_.size(); }
    const std::vector<Edge>& node_edges() const { return node_edges_; }
    const Edge& node_edge(std::size_t node) const { return node_edges_.at(node); }

    // Out-neighbors, ascending.
    const std::vector<std::size_t>& out(std::size_t node) const { return out_.at(node); }
    std::size_t arc_count() const { return arc_count_; }

    bool has_arc(std::size_t from, std::size_t to) const {
        const auto& ns = out_.at(from);
        return std::binary_search(ns.begin(), ns.end(), to);
    }

private:
    friend BDDigraph bd_map(const BipartiteGraph&, const Matching&);

    std::vector<Edge> node_edges_;
    std::vector<std::vector<std::size_t>> out_;
    std::size_t arc_count_ = 0;
};

// Builds the BD-mapping digraph of (g, m). Throws std::invalid_argument when
// m is not a valid matching of g. Linear in |V| + |E|.
inline BDDigraph bd_map(const BipartiteGraph& g, const Matching& m) {
    auto check = is_valid_matching(g, m.pairs());
    if (!check.valid) throw std::invalid_argument("bd_map: invalid matching: " + check.violation);

    BDDigraph d;
    d.node_edges_ = m.pairs(); // already sorted
    d.out_.resize(d.node_edges_.size());

    std::vector<std::size_t> node_of_x(g.x_count(), no_vertex), node_of_y(g.y_count(), no_vertex);
    for (std::size_t i = 0; i < d.node_edges_.size(); ++i) {
        node_of_x[d.node_edges_[i].x] = i;
        node_of_y[d.node_edges_[i].y] = i;
    }

    for (const Edge& e : g.edges()) {
        const std::size_t i = node_of_x[e.x];
        const std::size_t j = node_of_y[e.y];
        if (i == no_vertex || j == no_vertex) continue; // an endpoint is free
        if (i == j) continue;                           // the matching edge itself
        d.out_[i].push_back(j);
        ++d.arc_count_;
    }
    for (auto& ns : d.out_) std::sort(ns.begin(), ns.end());
    return d;
}

// BD-mapping digraph extended with the matching's free vertices and boundary
// arcs. Free X vertices only emit arcs (to the node saturating a neighbor);
// free Y vertices only receive them, so directed paths leaving a free node
// correspond to alternating paths of g that start with a non-matching edge,
// and the extension is acyclic exactly when the core is.
//
// Node ids: core nodes first (as in BDDigraph), then free vertices in
// free_vertices() order, offset by core_count().
class ExtendedBDDigraph {
public:
    ExtendedBDDigraph() = default;

    const BDDigraph& core() const { return core_; }
    std::size_t core_count() const { return core_.node_count(); }
    std::size_t free_count() const { return free_.size(); }
    std::size_t node_count() const { return core_count() + free_count(); }

    bool is_core(std::size_t node) const { return node < core_count(); }
    const VertexRef& free_vertex(std::size_t node) const { return free_.at(node - core_count()); }
    const std::vector<VertexRef>& free_vertices() const { return free_; }

    // Combined adjacency over core + free ids, ascending.
    const std::vector<std::size_t>& out(std::size_t node) const { return out_.at(node); }
    std::size_t arc_count() const { return core_.arc_count() + boundary_arc_count_; }
    std::size_t boundary_arc_count() const { return boundary_arc_count_; }

private:
    friend ExtendedBDDigraph extended_bd_map(const BipartiteGraph&, const Matching&);

    BDDigraph core_;
    std::vector<VertexRef> free_;
    std::vector<std::vector<std::size_t>> out_;
    std::size_t boundary_arc_count_ = 0;
};

// Builds the extended BD-mapping digraph. m must be a maximum matching of g
// (otherwise an edge between two free vertices could exist, which the
// extension has no arc for); throws std::invalid_argument when it is not.
inline ExtendedBDDigraph extended_bd_map(const BipartiteGraph& g, const Matching& m) {
    ExtendedBDDigraph d;
    d.core_ = bd_map(g, m); // validates m
    if (m.size() != maximum_matching(g).size())
        throw std::invalid_argument("extended_bd_map: matching is not maximum");

    d.free_ = free_vertices(g, m);
    const std::size_t nc = d.core_count();
    d.out_.resize(nc + d.free_.size());
    for (std::size_t i = 0; i < nc; ++i) d.out_[i] = d.core_.out(i);

    std::vector<std::size_t> node_of_x(g.x_count(), no_vertex), node_of_y(g.y_count(), no_vertex);
    for (std::size_t i = 0; i < nc; ++i) {
        node_of_x[d.core_.node_edge(i).x] = i;
        node_of_y[d.core_.node_edge(i).y] = i;
    }

    for (std::size_t fi = 0; fi < d.free_.size(); ++fi) {
        const VertexRef v = d.free_[fi];
        const std::size_t self = nc + fi;
        if (v.side == Side::X) {
            for (std::size_t y : g.neighbors_of_x(v.index)) {
                // y is saturated: an edge between two free vertices would
                // contradict maximality.
                d.out_[self].push_back(node_of_y[y]);
                ++d.boundary_arc_count_;
            }
        } else {
            for (std::size_t x : g.neighbors_of_y(v.index)) {
                d.out_[node_of_x[x]].push_back(self);
                ++d.boundary_arc_count_;
            }
        }
    }
    for (auto& ns : d.out_) std::sort(ns.begin(), ns.end());
    return d;
}

// Translates a directed cycle of bd_map(g, m) back into the alternating
// cycle of g that witnesses it: node i unwraps to its matching edge, arc
// i -> j to the non-matching edge (x_i, y_j). The result has 2 * |cycle|
// edges, starts with a matching edge, and alternates membership in m.
inline std::vector<Edge> cycle_to_alternating_cycle(const BipartiteGraph& g, const Matching& m,
                                                    const std::vector<std::size_t>& cycle) {
    const BDDigraph d = bd_map(g, m);
    if (cycle.size() < 2)
        throw std::invalid_argument("cycle_to_alternating_cycle: a cycle has at least 2 nodes");
    std::vector<bool> seen(d.node_count(), false);
    for (std::size_t node : cycle) {
        if (node >= d.node_count())
            throw std::invalid_argument("cycle_to_alternating_cycle: node id out of range");
        if (seen[node])
            throw std::invalid_argument("cycle_to_alternating_cycle: repeated node in cycle");
        seen[node] = true;
    }
    std::vector<Edge> out;
    out.reserve(2 * cycle.size());
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        const std::size_t i = cycle[k];
        const std::size_t j = cycle[(k + 1) % cycle.size()];
        if (!d.has_arc(i, j))
            throw std::invalid_argument("cycle_to_alternating_cycle: not a cycle of the digraph");
        out.push_back(d.node_edge(i));
        out.push_back({d.node_edge(i).x, d.node_edge(j).y});
    }
    return out;
}

} // namespace urmatch

#endif // URMATCH_BD_DIGRAPH_HPP
