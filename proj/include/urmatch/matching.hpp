#ifndef URMATCH_MATCHING_HPP
#define URMATCH_MATCHING_HPP

#include <algorithm>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "urmatch/bipartite_graph.hpp"

namespace urmatch {

// First-violation report for a candidate pair set.
struct MatchingValidation {
    bool valid = true;
    std::string violation;
};

// True iff every pair is an edge of g and no vertex appears in two pairs.
inline MatchingValidation is_valid_matching(const BipartiteGraph& g,
                                            const std::vector<Edge>& pairs) {
    std::vector<bool> used_x(g.x_count(), false), used_y(g.y_count(), false);
    for (const Edge& e : pairs) {
        if (!g.has_edge(e.x, e.y))
            return {false, "pair (" + std::to_string(e.x + 1) + ", " + std::to_string(e.y + 1) +
                               ") is not an edge of the graph"};
        if (used_x[e.x])
            return {false, "vertex x" + std::to_string(e.x + 1) + " appears in two pairs"};
        if (used_y[e.y])
            return {false, "vertex y" + std::to_string(e.y + 1) + " appears in two pairs"};
        used_x[e.x] = true;
        used_y[e.y] = true;
    }
    return {};
}

// A vertex-disjoint edge subset of a host graph, with two-way partner lookup.
// Pairs are kept sorted by (x, y); that order also numbers the BD-digraph
// nodes downstream.
class Matching {
public:
    Matching() = default;

    // Validates against the host graph; throws std::invalid_argument with the
    // first violation otherwise.
    static Matching from_pairs(const BipartiteGraph& g, std::vector<Edge> pairs) {
        auto check = is_valid_matching(g, pairs);
        if (!check.valid) throw std::invalid_argument("invalid matching: " + check.violation);
        std::sort(pairs.begin(), pairs.end());
        Matching m;
        m.pairs_ = std::move(pairs);
        m.partner_x_.assign(g.x_count(), no_vertex);
        m.partner_y_.assign(g.y_count(), no_vertex);
        for (const Edge& e : m.pairs_) {
            m.partner_x_[e.x] = e.y;
            m.partner_y_[e.y] = e.x;
        }
        return m;
    }

    const std::vector<Edge>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }

    bool saturates_x(std::size_t x) const { return x < partner_x_.size() && partner_x_[x] != no_vertex; }
    bool saturates_y(std::size_t y) const { return y < partner_y_.size() && partner_y_[y] != no_vertex; }
    bool saturates(VertexRef v) const {
        return v.side == Side::X ? saturates_x(v.index) : saturates_y(v.index);
    }

    std::optional<std::size_t> partner_of_x(std::size_t x) const {
        if (!saturates_x(x)) return std::nullopt;
        return partner_x_[x];
    }
    std::optional<std::size_t> partner_of_y(std::size_t y) const {
        if (!saturates_y(y)) return std::nullopt;
        return partner_y_[y];
    }

    bool contains(const Edge& e) const {
        return std::binary_search(pairs_.begin(), pairs_.end(), e);
    }

    friend bool operator==(const Matching& a, const Matching& b) { return a.pairs_ == b.pairs_; }

private:
    std::vector<Edge> pairs_;
    std::vector<std::size_t> partner_x_;
    std::vector<std::size_t> partner_y_;
};

// Unsaturated vertices, X side first, each side ascending (the set V_f).
inline std::vector<VertexRef> free_vertices(const BipartiteGraph& g, const Matching& m) {
    std::vector<VertexRef> free;
    for (std::size_t x = 0; x < g.x_count(); ++x)
        if (!m.saturates_x(x)) free.push_back({Side::X, x});
    for (std::size_t y = 0; y < g.y_count(); ++y)
        if (!m.saturates_y(y)) free.push_back({Side::Y, y});
    return free;
}

// Subgraph induced by the vertices m saturates (G[M]), with maps from the
// subgraph's compact indices back to the host graph's.
struct InducedSubgraph {
    BipartiteGraph graph;
    std::vector<std::size_t> x_to_host;
    std::vector<std::size_t> y_to_host;
};

inline InducedSubgraph induced_subgraph(const BipartiteGraph& g, const Matching& m) {
    std::vector<std::size_t> x_to_sub(g.x_count(), no_vertex), y_to_sub(g.y_count(), no_vertex);
    InducedSubgraph sub;
    for (std::size_t x = 0; x < g.x_count(); ++x)
        if (m.saturates_x(x)) {
            x_to_sub[x] = sub.x_to_host.size();
            sub.x_to_host.push_back(x);
        }
    for (std::size_t y = 0; y < g.y_count(); ++y)
        if (m.saturates_y(y)) {
            y_to_sub[y] = sub.y_to_host.size();
            sub.y_to_host.push_back(y);
        }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (x_to_sub[e.x] != no_vertex && y_to_sub[e.y] != no_vertex)
            edges.push_back({x_to_sub[e.x], y_to_sub[e.y]});
    sub.graph = BipartiteGraph(sub.x_to_host.size(), sub.y_to_host.size(), std::move(edges));
    return sub;
}

// Matching file format: one line 'm <x> <y>' per matched edge, 1-based;
// comments and blank lines as in the graph format. An empty file is the
// empty matching.
inline std::vector<Edge> parse_matching_pairs(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<Edge> pairs;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = detail::split_ws(line);
        if (detail::is_blank_or_comment(tokens)) continue;
        std::size_t x = 0, y = 0;
        if (tokens.size() != 3 || tokens[0] != "m" || !detail::parse_number(tokens[1], x) ||
            !detail::parse_number(tokens[2], y))
            throw parse_error(line_no, "malformed matching line, expected 'm <x> <y>'");
        if (x < 1 || y < 1)
            throw parse_error(line_no, "matching indices are 1-based");
        pairs.push_back(Edge{x - 1, y - 1});
    }
    return pairs;
}

inline std::vector<Edge> parse_matching_pairs(const std::string& text) {
    std::istringstream in(text);
    return parse_matching_pairs(in);
}

inline void serialize_matching(const Matching& m, std::ostream& out) {
    for (const Edge& e : m.pairs()) out << "m " << e.x + 1 << " " << e.y + 1 << "\n";
}

inline std::string serialize_matching(const Matching& m) {
    std::ostringstream out;
    serialize_matching(m, out);
    return out.str();
}

} // namespace urmatch

#endif // URMATCH_MATCHING_HPP
