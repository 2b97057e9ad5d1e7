#ifndef URMATCH_BIPARTITE_GRAPH_HPP
#define URMATCH_BIPARTITE_GRAPH_HPP

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "urmatch/errors.hpp"

namespace urmatch {

inline constexpr std::size_t no_vertex = static_cast<std::size_t>(-1);

enum class Side : std::uint8_t { X, Y };

// Uniform address for a vertex on either side of the bipartition.
struct VertexRef {
    Side side;
    std::size_t index;

    friend bool operator==(const VertexRef&, const VertexRef&) = default;
    friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

// A crossing edge, 0-based on both sides.
struct Edge {
    std::size_t x;
    std::size_t y;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Human-facing vertex names: x1..xn / y1..yn (1-based, as in the file format).
inline std::string vertex_name(VertexRef v) {
    return (v.side == Side::X ? "x" : "y") + std::to_string(v.index + 1);
}

// Bipartite graph with partitioned vertex sets and a crossing edge list.
// Immutable after construction; isolated vertices are allowed (x_count /
// y_count may exceed the vertices that appear in edges). Neighbor lists are
// kept sorted ascending.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    BipartiteGraph(std::size_t x_count, std::size_t y_count, std::vector<Edge> edges)
        : x_count_(x_count), y_count_(y_count), edges_(std::move(edges)) {
        adj_x_.resize(x_count_);
        adj_y_.resize(y_count_);
        for (const Edge& e : edges_) {
            if (e.x >= x_count_ || e.y >= y_count_)
                throw std::invalid_argument("edge (" + std::to_string(e.x + 1) + ", " +
                                            std::to_string(e.y + 1) + ") is out of range");
            adj_x_[e.x].push_back(e.y);
            adj_y_[e.y].push_back(e.x);
        }
        for (auto& ns : adj_x_) std::sort(ns.begin(), ns.end());
        for (auto& ns : adj_y_) std::sort(ns.begin(), ns.end());
        for (std::size_t x = 0; x < x_count_; ++x)
            if (std::adjacent_find(adj_x_[x].begin(), adj_x_[x].end()) != adj_x_[x].end())
                throw std::invalid_argument("duplicate edge incident to x" + std::to_string(x + 1));
    }

    std::size_t x_count() const { return x_count_; }
    std::size_t y_count() const { return y_count_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Edges in input order (the file format preserves it).
    const std::vector<Edge>& edges() const { return edges_; }

    // Y-neighbors of an X vertex, ascending.
    const std::vector<std::size_t>& neighbors_of_x(std::size_t x) const { return adj_x_.at(x); }

    // X-neighbors of a Y vertex, ascending.
    const std::vector<std::size_t>& neighbors_of_y(std::size_t y) const { return adj_y_.at(y); }

    std::size_t degree(VertexRef v) const {
        return v.side == Side::X ? adj_x_.at(v.index).size() : adj_y_.at(v.index).size();
    }

    bool has_edge(std::size_t x, std::size_t y) const {
        if (x >= x_count_ || y >= y_count_) return false;
        return std::binary_search(adj_x_[x].begin(), adj_x_[x].end(), y);
    }

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
        return a.x_count_ == b.x_count_ && a.y_count_ == b.y_count_ && a.edges_ == b.edges_;
    }

private:
    std::size_t x_count_ = 0;
    std::size_t y_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adj_x_;
    std::vector<std::vector<std::size_t>> adj_y_;
};

namespace detail {

inline bool parse_number(std::string_view token, std::size_t& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

inline bool is_blank_or_comment(const std::vector<std::string>& tokens) {
    return tokens.empty() || tokens.front().front() == '#';
}

} // namespace detail

// Edge-list format:
//   p bip <|X|> <|Y|> <|E|>
//   e <x> <y>          (exactly |E| lines, 1-based indices)
// '#'-prefixed lines are comments; blank lines are skipped. Edge order is
// preserved. Errors carry the offending 1-based line number.
inline BipartiteGraph parse_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t x_count = 0, y_count = 0, edge_target = 0;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;

    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = detail::split_ws(line);
        if (detail::is_blank_or_comment(tokens)) continue;

        if (!have_header) {
            if (tokens.size() != 5 || tokens[0] != "p" || tokens[1] != "bip" ||
                !detail::parse_number(tokens[2], x_count) ||
                !detail::parse_number(tokens[3], y_count) ||
                !detail::parse_number(tokens[4], edge_target))
                throw parse_error(line_no, "malformed header, expected 'p bip <|X|> <|Y|> <|E|>'");
            have_header = true;
            edges.reserve(edge_target);
            continue;
        }

        if (edges.size() == edge_target)
            throw parse_error(line_no, "unexpected line after " + std::to_string(edge_target) +
                                           " edges");
        std::size_t x = 0, y = 0;
        if (tokens.size() != 3 || tokens[0] != "e" || !detail::parse_number(tokens[1], x) ||
            !detail::parse_number(tokens[2], y))
            throw parse_error(line_no, "malformed edge line, expected 'e <x> <y>'");
        if (x < 1 || x > x_count || y < 1 || y > y_count)
            throw parse_error(line_no, "edge index out of range: e " + tokens[1] + " " + tokens[2]);
        const std::uint64_t key = static_cast<std::uint64_t>(x - 1) * y_count + (y - 1);
        if (!seen.insert(key).second)
            throw parse_error(line_no, "duplicate edge: e " + tokens[1] + " " + tokens[2]);
        edges.push_back(Edge{x - 1, y - 1});
    }

    if (!have_header) throw parse_error(line_no + 1, "missing header line");
    if (edges.size() != edge_target)
        throw parse_error(line_no + 1, "expected " + std::to_string(edge_target) +
                                           " edge lines, found " + std::to_string(edges.size()));
    return BipartiteGraph(x_count, y_count, std::move(edges));
}

inline BipartiteGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline void serialize_graph(const BipartiteGraph& g, std::ostream& out) {
    out << "p bip " << g.x_count() << " " << g.y_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << "e " << e.x + 1 << " " << e.y + 1 << "\n";
}

inline std::string serialize_graph(const BipartiteGraph& g) {
    std::ostringstream out;
    serialize_graph(g, out);
    return out.str();
}

} // namespace urmatch

#endif // URMATCH_BIPARTITE_GRAPH_HPP
