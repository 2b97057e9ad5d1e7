#ifndef URMATCH_UR_ANALYSIS_HPP
#define URMATCH_UR_ANALYSIS_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "urmatch/acyclicity.hpp"
#include "urmatch/bd_digraph.hpp"
#include "urmatch/enumerate.hpp"

namespace urmatch {

// Decision plus certificate: a topological order of the BD-digraph proves
// the matching uniquely restricted; an alternating cycle of g disproves it
// (swapping the cycle's matching / non-matching edges yields a second
// perfect matching of G[M]).
struct UrVerdict {
    bool uniquely_restricted = true;
    std::vector<std::size_t> topological_order; // when uniquely restricted
    std::vector<Edge> alternating_cycle;        // otherwise
};

// Fast uniquely-restricted test: m is uniquely restricted iff bd_map(g, m)
// is acyclic. Linear in |V| + |E|. Matchings of size <= 1 are trivially
// uniquely restricted (their digraph has at most one node and no loops).
inline UrVerdict is_uniquely_restricted(const BipartiteGraph& g, const Matching& m) {
    const BDDigraph d = bd_map(g, m);
    AcyclicityCertificate cert = acyclicity_certificate(d);
    UrVerdict verdict;
    if (cert.is_acyclic()) {
        verdict.topological_order = std::move(cert.topological_order);
        return verdict;
    }
    verdict.uniquely_restricted = false;
    verdict.alternating_cycle = cycle_to_alternating_cycle(g, m, cert.cycle);
    return verdict;
}

// Ground-truth uniquely-restricted test by definition: the subgraph induced
// by m's saturated vertices has exactly one perfect matching. Desk scale.
inline bool is_uniquely_restricted_oracle(const BipartiteGraph& g, const Matching& m,
                                          std::size_t max_edges = 24) {
    InducedSubgraph sub = induced_subgraph(g, m);
    return enumerate_perfect_matchings(sub.graph, max_edges).size() == 1;
}

enum class UniquePmVerdict { unique_perfect, not_perfect, perfect_not_unique };

inline const char* to_string(UniquePmVerdict v) {
    switch (v) {
        case UniquePmVerdict::unique_perfect: return "unique_perfect";
        case UniquePmVerdict::not_perfect: return "not_perfect";
        default: return "perfect_not_unique";
    }
}

struct UniquePmReport {
    UniquePmVerdict verdict = UniquePmVerdict::not_perfect;
    std::vector<std::size_t> topological_order; // when unique_perfect
    std::vector<Edge> alternating_cycle;        // when perfect_not_unique
};

// Unique-perfect-matching recognizer: m is a unique perfect matching of g
// iff it is perfect and its BD-digraph is acyclic.
inline UniquePmReport unique_perfect_matching(const BipartiteGraph& g, const Matching& m) {
    UniquePmReport report;
    if (g.x_count() != g.y_count() || m.size() != g.x_count()) {
        auto check = is_valid_matching(g, m.pairs());
        if (!check.valid)
            throw std::invalid_argument("unique_perfect_matching: invalid matching: " +
                                        check.violation);
        return report;
    }
    UrVerdict ur = is_uniquely_restricted(g, m);
    if (ur.uniquely_restricted) {
        report.verdict = UniquePmVerdict::unique_perfect;
        report.topological_order = std::move(ur.topological_order);
    } else {
        report.verdict = UniquePmVerdict::perfect_not_unique;
        report.alternating_cycle = std::move(ur.alternating_cycle);
    }
    return report;
}

// Forcing-set verdict with the residual digraph's certificate. Node ids in
// the certificate refer to bd_map(g, m)'s numbering.
struct ForcingReport {
    std::vector<Edge> set;
    bool is_forcing = false;
    AcyclicityCertificate residual_certificate;
};

namespace detail {

// Sub-digraph on the kept nodes, preserving original node ids in reported
// certificates via the remap table.
struct NodeSubset {
    AdjacencyDigraph digraph;
    std::vector<std::size_t> to_original;
};

inline NodeSubset restrict_nodes(const BDDigraph& d, const std::vector<bool>& keep) {
    NodeSubset sub;
    std::vector<std::size_t> to_sub(d.node_count(), no_vertex);
    for (std::size_t i = 0; i < d.node_count(); ++i)
        if (keep[i]) {
            to_sub[i] = sub.to_original.size();
            sub.to_original.push_back(i);
        }
    sub.digraph.adjacency.resize(sub.to_original.size());
    for (std::size_t i = 0; i < d.node_count(); ++i) {
        if (!keep[i]) continue;
        for (std::size_t j : d.out(i))
            if (keep[j]) sub.digraph.adjacency[to_sub[i]].push_back(to_sub[j]);
    }
    return sub;
}

inline AcyclicityCertificate certificate_with_original_ids(const NodeSubset& sub) {
    AcyclicityCertificate cert = acyclicity_certificate(sub.digraph);
    for (std::size_t& node : cert.topological_order) node = sub.to_original[node];
    for (std::size_t& node : cert.cycle) node = sub.to_original[node];
    return cert;
}

} // namespace detail

// Forcing-set verifier: s (a subset of the perfect matching m) forces m iff
// the BD-digraph with s's nodes deleted is acyclic.
inline ForcingReport is_forcing_set(const BipartiteGraph& g, const Matching& m,
                                    std::vector<Edge> s) {
    if (g.x_count() != g.y_count() || m.size() != g.x_count())
        throw std::invalid_argument("is_forcing_set: matching is not perfect");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (const Edge& e : s)
        if (!m.contains(e))
            throw std::invalid_argument("is_forcing_set: pair (" + std::to_string(e.x + 1) + ", " +
                                        std::to_string(e.y + 1) + ") is not in the matching");

    const BDDigraph d = bd_map(g, m);
    std::vector<bool> keep(d.node_count(), true);
    for (std::size_t i = 0; i < d.node_count(); ++i)
        if (std::binary_search(s.begin(), s.end(), d.node_edge(i))) keep[i] = false;

    ForcingReport report;
    report.set = std::move(s);
    report.residual_certificate = detail::certificate_with_original_ids(detail::restrict_nodes(d, keep));
    report.is_forcing = report.residual_certificate.is_acyclic();
    return report;
}

namespace detail {

// Iterative-deepening hitting-set search: branch on the nodes of some cycle
// of the residual digraph. Exact; the underlying problem is minimum feedback
// vertex set, so only desk-scale node counts are accepted.
inline bool min_forcing_recurse(const BDDigraph& d, std::vector<bool>& keep, std::size_t slack,
                                std::vector<std::size_t>& removed) {
    NodeSubset sub = restrict_nodes(d, keep);
    std::vector<std::size_t> cycle = find_cycle(sub.digraph);
    if (cycle.empty()) return true;
    if (slack == 0) return false;
    for (std::size_t node : cycle) {
        std::size_t orig = sub.to_original[node];
        keep[orig] = false;
        removed.push_back(orig);
        if (min_forcing_recurse(d, keep, slack - 1, removed)) return true;
        removed.pop_back();
        keep[orig] = true;
    }
    return false;
}

} // namespace detail

// Minimum-cardinality forcing set of a perfect matching; size 0 exactly when
// m is the unique perfect matching. Exact subset search, refused above
// max_nodes digraph nodes.
inline std::vector<Edge> minimum_forcing_set(const BipartiteGraph& g, const Matching& m,
                                             std::size_t max_nodes = 20) {
    if (g.x_count() != g.y_count() || m.size() != g.x_count())
        throw std::invalid_argument("minimum_forcing_set: matching is not perfect");
    const BDDigraph d = bd_map(g, m);
    if (d.node_count() > max_nodes)
        throw budget_exceeded("minimum_forcing_set: " + std::to_string(d.node_count()) +
                              " digraph nodes exceed the cap of " + std::to_string(max_nodes));

    std::vector<bool> keep(d.node_count(), true);
    std::vector<std::size_t> removed;
    for (std::size_t k = 0; k <= d.node_count(); ++k) {
        if (detail::min_forcing_recurse(d, keep, k, removed)) {
            std::vector<Edge> set;
            for (std::size_t node : removed) set.push_back(d.node_edge(node));
            std::sort(set.begin(), set.end());
            return set;
        }
    }
    return m.pairs(); // unreachable: deleting every node is always forcing
}

} // namespace urmatch

#endif // URMATCH_UR_ANALYSIS_HPP
