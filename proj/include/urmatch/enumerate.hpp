#ifndef URMATCH_ENUMERATE_HPP
#define URMATCH_ENUMERATE_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "urmatch/maximum_matching.hpp"

namespace urmatch {

namespace detail {

// Backtracking over the sorted edge list: at each index, the take branch is
// explored before the skip branch, so matchings come out in lexicographic
// order of their sorted pair lists and no deduplication is needed.
class MatchingEnumerator {
public:
    MatchingEnumerator(const BipartiteGraph& g, bool perfect_only, std::size_t target)
        : g_(g), perfect_only_(perfect_only), target_(target), edges_(g.edges()) {
        std::sort(edges_.begin(), edges_.end());
        last_edge_of_x_.assign(g.x_count(), no_vertex);
        suffix_distinct_x_.assign(edges_.size() + 1, 0);
        suffix_distinct_y_.assign(edges_.size() + 1, 0);
        std::vector<bool> seen_x(g.x_count(), false), seen_y(g.y_count(), false);
        for (std::size_t i = edges_.size(); i-- > 0;) {
            if (last_edge_of_x_[edges_[i].x] == no_vertex) last_edge_of_x_[edges_[i].x] = i;
            suffix_distinct_x_[i] = suffix_distinct_x_[i + 1] + (seen_x[edges_[i].x] ? 0 : 1);
            suffix_distinct_y_[i] = suffix_distinct_y_[i + 1] + (seen_y[edges_[i].y] ? 0 : 1);
            seen_x[edges_[i].x] = true;
            seen_y[edges_[i].y] = true;
        }
        used_x_.assign(g.x_count(), false);
        used_y_.assign(g.y_count(), false);
    }

    std::vector<Matching> run() {
        std::vector<Matching> out;
        recurse(0, out);
        return out;
    }

private:
    void recurse(std::size_t i, std::vector<Matching>& out) {
        if (i == edges_.size()) {
            if (current_.size() == target_) out.push_back(Matching::from_pairs(g_, current_));
            return;
        }
        const Edge& e = edges_[i];
        if (!used_x_[e.x] && !used_y_[e.y]) {
            used_x_[e.x] = used_y_[e.y] = true;
            current_.push_back(e);
            recurse(i + 1, out);
            current_.pop_back();
            used_x_[e.x] = used_y_[e.y] = false;
        }
        // Skip branch. A perfect matching cannot leave an X vertex behind its
        // last incident edge; a maximum one must still be able to reach the
        // target cardinality.
        if (perfect_only_ && !used_x_[e.x] && last_edge_of_x_[e.x] == i) return;
        std::size_t bound = std::min(suffix_distinct_x_[i + 1], suffix_distinct_y_[i + 1]);
        if (current_.size() + bound < target_) return;
        recurse(i + 1, out);
    }

    const BipartiteGraph& g_;
    bool perfect_only_;
    std::size_t target_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> last_edge_of_x_;
    std::vector<std::size_t> suffix_distinct_x_, suffix_distinct_y_;
    std::vector<bool> used_x_, used_y_;
    std::vector<Edge> current_;
};

} // namespace detail

// Every maximum matching of g exactly once, in lexicographic order of the
// sorted pair lists. Exhaustive edge-subset backtracking, intended for desk
// scale; refuses instances above max_edges.
inline std::vector<Matching> enumerate_maximum_matchings(const BipartiteGraph& g,
                                                         std::size_t max_edges = 24) {
    if (g.edge_count() > max_edges)
        throw budget_exceeded("enumerate_maximum_matchings: " + std::to_string(g.edge_count()) +
                              " edges exceed the cap of " + std::to_string(max_edges));
    std::size_t target = maximum_matching(g).size();
    return detail::MatchingEnumerator(g, false, target).run();
}

// Every perfect matching of g exactly once, lexicographic order; the empty
// sequence when the sides differ.
inline std::vector<Matching> enumerate_perfect_matchings(const BipartiteGraph& g,
                                                         std::size_t max_edges = 24) {
    if (g.edge_count() > max_edges)
        throw budget_exceeded("enumerate_perfect_matchings: " + std::to_string(g.edge_count()) +
                              " edges exceed the cap of " + std::to_string(max_edges));
    if (g.x_count() != g.y_count()) return {};
    return detail::MatchingEnumerator(g, true, g.x_count()).run();
}

} // namespace urmatch

#endif // URMATCH_ENUMERATE_HPP
