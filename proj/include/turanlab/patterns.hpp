#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "turanlab/hypergraph.hpp"

namespace turanlab {

enum class PatternKind { SigmaMember, GeneralizedTriangle, ThinViolation, Clique };

inline const char* pattern_kind_name(PatternKind k) {
    switch (k) {
        case PatternKind::SigmaMember: return "sigma-member";
        case PatternKind::GeneralizedTriangle: return "generalized-triangle";
        case PatternKind::ThinViolation: return "thin-violation";
        case PatternKind::Clique: return "clique";
    }
    return "?";
}

struct PatternHit {
    PatternKind kind;
    std::vector<Edge> witness_edges;
    Edge witness_vertices;
};

namespace detail {

inline Edge union_of(const std::vector<Edge>& edges) {
    Edge out;
    for (const auto& e : edges) {
        Edge next;
        std::set_union(out.begin(), out.end(), e.begin(), e.end(), std::back_inserter(next));
        out = std::move(next);
    }
    return out;
}

} // namespace detail

/// First pair of edges (lexicographic by edge pair) sharing exactly r-1
/// vertices, i.e. a two-edge witness that the graph is not thin.
inline std::optional<PatternHit> find_thin_violation(const Hypergraph& g) {
    const auto& edges = g.edges();
    const int want = g.uniformity() - 1;
    if (want < 0) return std::nullopt;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            int shared;
            if (g.has_masks())
                shared = std::popcount(g.mask(i) & g.mask(j));
            else
                shared = intersection_size(edges[i], edges[j]);
            if (shared == want) {
                PatternHit hit{PatternKind::ThinViolation,
                               {edges[i], edges[j]},
                               detail::union_of({edges[i], edges[j]})};
                return hit;
            }
        }
    }
    return std::nullopt;
}

namespace detail {

/// Shared scan for the three-edge patterns. `require_disjoint_core` = true
/// additionally demands C disjoint from A n B, which pins down an injective
/// generalized-triangle copy on 2r-1 distinct vertices.
inline std::optional<PatternHit> find_three_edge_pattern(const Hypergraph& g,
                                                         bool require_disjoint_core) {
    const auto& edges = g.edges();
    const int r = g.uniformity();
    if (r < 2) return std::nullopt;
    const bool masks = g.has_masks();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            std::uint64_t diff = 0, core = 0;
            if (masks) {
                core = g.mask(i) & g.mask(j);
                if (std::popcount(core) != r - 1) continue;
                diff = g.mask(i) ^ g.mask(j);
            } else {
                if (intersection_size(edges[i], edges[j]) != r - 1) continue;
            }
            for (std::size_t k = 0; k < edges.size(); ++k) {
                bool covers, disjoint;
                if (masks) {
                    covers = (diff & ~g.mask(k)) == 0;
                    disjoint = (core & g.mask(k)) == 0;
                } else {
                    const Edge d = edge_symmetric_difference(edges[i], edges[j]);
                    covers = edge_subset(d, edges[k]);
                    disjoint =
                        intersection_size(edge_intersection(edges[i], edges[j]), edges[k]) == 0;
                }
                if (!covers) continue;
                if (require_disjoint_core && !disjoint) continue;
                PatternHit hit{require_disjoint_core ? PatternKind::GeneralizedTriangle
                                                     : PatternKind::SigmaMember,
                               {edges[i], edges[j], edges[k]},
                               union_of({edges[i], edges[j], edges[k]})};
                return hit;
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Three edges A,B,C with |A n B| = r-1 and A symdiff B contained in C.
/// Scan order: thin pairs (A,B) lexicographically, then C ascending, so the
/// reported witness is the lexicographically smallest triple.
inline std::optional<PatternHit> find_sigma_member(const Hypergraph& g) {
    return detail::find_three_edge_pattern(g, false);
}

/// Same as find_sigma_member but with C disjoint from A n B: an injective
/// generalized-triangle copy on 2r-1 distinct vertices.
inline std::optional<PatternHit> find_generalized_triangle(const Hypergraph& g) {
    return detail::find_three_edge_pattern(g, true);
}

namespace detail {

inline bool extend_clique(const std::vector<std::uint64_t>& adj, int n, int t, Vertex from,
                          std::uint64_t candidates, Edge& current) {
    if (static_cast<int>(current.size()) == t) return true;
    const int need = t - static_cast<int>(current.size());
    for (Vertex v = from; v < n; ++v) {
        if (!(candidates >> v & 1)) continue;
        if (n - v < need) return false;
        current.push_back(v);
        if (extend_clique(adj, n, t, v + 1, candidates & adj[v], current)) return true;
        current.pop_back();
    }
    return false;
}

} // namespace detail

/// Lexicographically smallest K_t vertex set in a 2-graph, if any.
inline std::optional<PatternHit> find_clique(const Hypergraph& g, int t) {
    if (g.uniformity() != 2) throw InvalidArgument("find_clique requires a 2-graph");
    if (t < 2) throw InvalidArgument("find_clique requires t >= 2");
    const int n = g.vertex_count();
    if (t > n) return std::nullopt;
    if (n > 64) throw InvalidArgument("find_clique supports n <= 64");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& e : g.edges()) {
        adj[e[0]] |= std::uint64_t{1} << e[1];
        adj[e[1]] |= std::uint64_t{1} << e[0];
    }
    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    Edge clique;
    if (!detail::extend_clique(adj, n, t, 0, all, clique)) return std::nullopt;
    std::vector<Edge> witness_edges;
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            witness_edges.push_back({clique[i], clique[j]});
    return PatternHit{PatternKind::Clique, std::move(witness_edges), std::move(clique)};
}

} // namespace turanlab
