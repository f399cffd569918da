#pragma once

#include <optional>
#include <vector>

#include "turanlab/hypergraph.hpp"

// Definition-literal exhaustive scans. These are deliberately written without
// the mask shortcuts or scan-order tricks of patterns.hpp so they can serve as
// an independent cross-check of the detectors.

namespace turanlab::brute {

/// Exhaustive pair scan: some two edges share exactly r-1 vertices?
inline bool has_thin_violation(const Hypergraph& g) {
    const auto& ed = g.edges();
    for (std::size_t i = 0; i < ed.size(); ++i)
        for (std::size_t j = 0; j < ed.size(); ++j) {
            if (i == j) continue;
            if (intersection_size(ed[i], ed[j]) == g.uniformity() - 1) return true;
        }
    return false;
}

/// Exhaustive ordered-triple scan of the sigma-family condition.
inline bool has_sigma_member(const Hypergraph& g) {
    const auto& ed = g.edges();
    for (std::size_t i = 0; i < ed.size(); ++i)
        for (std::size_t j = 0; j < ed.size(); ++j) {
            if (j == i) continue;
            if (intersection_size(ed[i], ed[j]) != g.uniformity() - 1) continue;
            const Edge diff = edge_symmetric_difference(ed[i], ed[j]);
            for (std::size_t k = 0; k < ed.size(); ++k)
                if (edge_subset(diff, ed[k])) return true;
        }
    return false;
}

/// Exhaustive ordered-triple scan for an injective generalized-triangle copy.
inline bool has_generalized_triangle(const Hypergraph& g) {
    const auto& ed = g.edges();
    for (std::size_t i = 0; i < ed.size(); ++i)
        for (std::size_t j = 0; j < ed.size(); ++j) {
            if (j == i) continue;
            if (intersection_size(ed[i], ed[j]) != g.uniformity() - 1) continue;
            const Edge diff = edge_symmetric_difference(ed[i], ed[j]);
            const Edge core = edge_intersection(ed[i], ed[j]);
            for (std::size_t k = 0; k < ed.size(); ++k) {
                if (!edge_subset(diff, ed[k])) continue;
                if (intersection_size(core, ed[k]) == 0) return true;
            }
        }
    return false;
}

namespace detail {

inline bool find_clique_from(const Hypergraph& g, int t, Vertex next, Edge& current) {
    if (static_cast<int>(current.size()) == t) return true;
    for (Vertex v = next; v < g.vertex_count(); ++v) {
        bool joined = true;
        for (Vertex u : current)
            if (!g.contains_edge({std::min(u, v), std::max(u, v)})) { joined = false; break; }
        if (!joined) continue;
        current.push_back(v);
        if (find_clique_from(g, t, v + 1, current)) return true;
        current.pop_back();
    }
    return false;
}

} // namespace detail

/// Plain subset recursion over vertex t-sets testing all pairs via edge lookup.
inline bool has_clique(const Hypergraph& g, int t) {
    if (g.uniformity() != 2) throw InvalidArgument("has_clique requires a 2-graph");
    Edge current;
    return detail::find_clique_from(g, t, 0, current);
}

} // namespace turanlab::brute
