#ifndef URMATCH_ACYCLICITY_HPP
#define URMATCH_ACYCLICITY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace urmatch {

// Minimal adjacency digraph satisfying the Digraph shape used by the
// templates below (node_count() and out(node) -> sorted neighbor list).
struct AdjacencyDigraph {
    std::vector<std::vector<std::size_t>> adjacency;

    std::size_t node_count() const { return adjacency.size(); }
    const std::vector<std::size_t>& out(std::size_t node) const { return adjacency[node]; }
};

template <class Digraph>
AdjacencyDigraph reversed(const Digraph& d) {
    AdjacencyDigraph rev;
    rev.adjacency.resize(d.node_count());
    for (std::size_t u = 0; u < d.node_count(); ++u)
        for (std::size_t v : d.out(u)) rev.adjacency[v].push_back(u);
    return rev;
}

// Auditable acyclicity decision: a full topological order proves "acyclic",
// an explicit directed cycle (length >= 2, consecutive members are arcs,
// wrapping) proves "cyclic".
struct AcyclicityCertificate {
    enum class Verdict { acyclic, cyclic };

    Verdict verdict = Verdict::acyclic;
    std::vector<std::size_t> topological_order; // present iff acyclic
    std::vector<std::size_t> cycle;             // present iff cyclic

    bool is_acyclic() const { return verdict == Verdict::acyclic; }
};

namespace detail {

// Tricolor iterative DFS; returns the first directed cycle found when nodes
// and neighbors are scanned in ascending order.
template <class Digraph>
std::vector<std::size_t> find_cycle(const Digraph& d) {
    enum : std::uint8_t { white, grey, black };
    std::vector<std::uint8_t> color(d.node_count(), white);
    std::vector<std::size_t> path;
    // frame: (node, index of next out-neighbor to try)
    std::vector<std::pair<std::size_t, std::size_t>> frames;

    for (std::size_t start = 0; start < d.node_count(); ++start) {
        if (color[start] != white) continue;
        frames.push_back({start, 0});
        color[start] = grey;
        path.push_back(start);
        while (!frames.empty()) {
            auto& [node, next] = frames.back();
            if (next < d.out(node).size()) {
                std::size_t to = d.out(node)[next++];
                if (color[to] == grey) {
                    // cycle = path suffix starting at 'to'
                    std::vector<std::size_t> cycle;
                    std::size_t at = path.size();
                    while (path[--at] != to) {}
                    cycle.assign(path.begin() + at, path.end());
                    return cycle;
                }
                if (color[to] == white) {
                    color[to] = grey;
                    path.push_back(to);
                    frames.push_back({to, 0});
                }
            } else {
                color[node] = black;
                path.pop_back();
                frames.pop_back();
            }
        }
    }
    return {};
}

} // namespace detail

// Kahn's algorithm with a stack, then cycle extraction if it stalls.
// Deterministic for a given digraph value.
template <class Digraph>
AcyclicityCertificate acyclicity_certificate(const Digraph& d) {
    const std::size_t n = d.node_count();
    std::vector<std::size_t> in_degree(n, 0);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v : d.out(u)) ++in_degree[v];

    std::vector<std::size_t> stack;
    for (std::size_t u = n; u-- > 0;)
        if (in_degree[u] == 0) stack.push_back(u);

    AcyclicityCertificate cert;
    cert.topological_order.reserve(n);
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        cert.topological_order.push_back(u);
        for (std::size_t v : d.out(u))
            if (--in_degree[v] == 0) stack.push_back(v);
    }
    if (cert.topological_order.size() == n) return cert;

    cert.verdict = AcyclicityCertificate::Verdict::cyclic;
    cert.topological_order.clear();
    cert.cycle = detail::find_cycle(d);
    return cert;
}

// 0 / 1 / >=2 distinct directed paths between two nodes of a DAG; only the
// threshold matters, so the dynamic program saturates at 2. A node has one
// (empty) path to itself.
enum class PathCount : std::uint8_t { zero = 0, one = 1, two_or_more = 2 };

// Saturating path counts from source to every node, as raw 0/1/2 values.
template <class Digraph>
std::vector<std::uint8_t> path_counts_from(const Digraph& d, std::size_t source) {
    AcyclicityCertificate cert = acyclicity_certificate(d);
    if (!cert.is_acyclic())
        throw std::invalid_argument("path_counts_from: digraph is cyclic");
    std::vector<std::uint8_t> count(d.node_count(), 0);
    count[source] = 1;
    for (std::size_t u : cert.topological_order) {
        if (count[u] == 0) continue;
        for (std::size_t v : d.out(u))
            count[v] = static_cast<std::uint8_t>(std::min(2, count[v] + count[u]));
    }
    return count;
}

template <class Digraph>
PathCount count_paths(const Digraph& d, std::size_t source, std::size_t target) {
    return static_cast<PathCount>(path_counts_from(d, source)[target]);
}

} // namespace urmatch

#endif // URMATCH_ACYCLICITY_HPP
