#pragma once

#include <turanlab/turanlab.hpp>

namespace fixtures {

using turanlab::Edge;
using turanlab::Hypergraph;

/// The 3-uniform generalized triangle on 5 vertices.
inline Hypergraph t3() {
    return Hypergraph(3, 5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}});
}

/// The classic Fano plane labeling used throughout the tests.
inline Hypergraph fano() {
    return Hypergraph(3, 7,
                      {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

inline Hypergraph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Hypergraph(2, n, std::move(edges));
}

inline Hypergraph cycle(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        int u = (v + 1) % n;
        edges.push_back({std::min(v, u), std::max(v, u)});
    }
    return Hypergraph(2, n, std::move(edges));
}

/// Path on three vertices: edges 01, 12.
inline Hypergraph p3() {
    return Hypergraph(2, 3, {{0, 1}, {1, 2}});
}

inline Hypergraph single_edge(int r) {
    Edge e;
    for (int v = 0; v < r; ++v) e.push_back(v);
    return Hypergraph(r, r, {e});
}

} // namespace fixtures
