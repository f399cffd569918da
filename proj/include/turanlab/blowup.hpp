#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "turanlab/hypergraph.hpp"
#include "turanlab/rational.hpp"

namespace turanlab {

/// A base graph together with a map from new vertices to base vertices.
/// Parts may be empty, which models deleting the base vertex.
struct BlowupSpec {
    Hypergraph base;
    std::vector<int> assignment; // assignment[v] in [0, base.vertex_count())

    BlowupSpec(Hypergraph base_graph, std::vector<int> assign)
        : base(std::move(base_graph)), assignment(std::move(assign)) {
        for (int part : assignment)
            if (part < 0 || part >= base.vertex_count())
                throw InvalidAssignment("assignment value out of range");
    }

    /// Contiguous parts of the given sizes: sizes[i] new vertices map to base
    /// vertex i.
    static BlowupSpec from_part_sizes(Hypergraph base_graph, const std::vector<int>& sizes) {
        if (static_cast<int>(sizes.size()) != base_graph.vertex_count())
            throw InvalidAssignment("need one part size per base vertex");
        std::vector<int> assign;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            if (sizes[i] < 0) throw InvalidAssignment("negative part size");
            assign.insert(assign.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
        }
        return BlowupSpec(std::move(base_graph), std::move(assign));
    }

    static BlowupSpec identity(Hypergraph base_graph) {
        std::vector<int> assign(static_cast<std::size_t>(base_graph.vertex_count()));
        std::iota(assign.begin(), assign.end(), 0);
        return BlowupSpec(std::move(base_graph), std::move(assign));
    }

    int target_vertex_count() const { return static_cast<int>(assignment.size()); }

    std::vector<int> part_sizes() const {
        std::vector<int> sizes(static_cast<std::size_t>(base.vertex_count()), 0);
        for (int part : assignment) ++sizes[static_cast<std::size_t>(part)];
        return sizes;
    }

    std::vector<std::vector<Vertex>> parts() const {
        std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(base.vertex_count()));
        for (std::size_t v = 0; v < assignment.size(); ++v)
            out[static_cast<std::size_t>(assignment[v])].push_back(static_cast<Vertex>(v));
        return out;
    }
};

/// All transversal r-sets whose part indices form a base edge.
inline Hypergraph blow_up(const BlowupSpec& spec) {
    const auto parts = spec.parts();
    const int r = spec.base.uniformity();
    std::vector<Edge> out;
    Edge scratch(static_cast<std::size_t>(r));
    for (const auto& base_edge : spec.base.edges()) {
        // cartesian product over the parts of this base edge
        bool nonempty = true;
        for (Vertex b : base_edge)
            if (parts[static_cast<std::size_t>(b)].empty()) { nonempty = false; break; }
        if (!nonempty) continue;
        std::vector<std::size_t> index(static_cast<std::size_t>(r), 0);
        while (true) {
            for (int i = 0; i < r; ++i)
                scratch[static_cast<std::size_t>(i)] =
                    parts[static_cast<std::size_t>(base_edge[static_cast<std::size_t>(i)])]
                         [index[static_cast<std::size_t>(i)]];
            Edge e = scratch;
            std::sort(e.begin(), e.end());
            out.push_back(std::move(e));
            int pos = r - 1;
            while (pos >= 0) {
                const auto& part = parts[static_cast<std::size_t>(base_edge[static_cast<std::size_t>(pos)])];
                if (++index[static_cast<std::size_t>(pos)] < part.size()) break;
                index[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return Hypergraph(r, spec.target_vertex_count(), std::move(out));
}

/// Clone v into k copies total: k-1 fresh vertices appended with links equal
/// to the link of v.
inline Hypergraph clone_vertex(const Hypergraph& g, Vertex v, int k) {
    if (v < 0 || v >= g.vertex_count()) throw InvalidArgument("clone_vertex: no such vertex");
    if (k < 1) throw InvalidArgument("clone_vertex: k must be >= 1");
    std::vector<Edge> edges = g.edges();
    const int n = g.vertex_count();
    for (int copy = 0; copy < k - 1; ++copy) {
        const Vertex fresh = n + copy;
        for (const auto& e : g.edges()) {
            if (!std::binary_search(e.begin(), e.end(), v)) continue;
            Edge clone;
            for (Vertex u : e)
                if (u != v) clone.push_back(u);
            clone.push_back(fresh);
            std::sort(clone.begin(), clone.end());
            edges.push_back(std::move(clone));
        }
    }
    return Hypergraph(g.uniformity(), n + k - 1, std::move(edges));
}

/// Edges of F meeting some part at least twice, in lexicographic order.
inline std::vector<Edge> transversal_violations(const Hypergraph& g, const BlowupSpec& spec) {
    if (g.vertex_count() != spec.target_vertex_count())
        throw DimensionMismatch("graph and spec vertex counts differ");
    std::vector<Edge> out;
    std::vector<int> seen(static_cast<std::size_t>(spec.base.vertex_count()), -1);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        bool violates = false;
        for (Vertex v : e) {
            const int part = spec.assignment[static_cast<std::size_t>(v)];
            if (seen[static_cast<std::size_t>(part)] == static_cast<int>(i)) { violates = true; break; }
            seen[static_cast<std::size_t>(part)] = static_cast<int>(i);
        }
        if (violates) out.push_back(e);
    }
    return out;
}

/// max_j | |P_j| - n/m | / n.
inline double epsilon_balance(const BlowupSpec& spec) {
    const int n = spec.target_vertex_count();
    if (n < 1) throw InvalidArgument("epsilon_balance needs at least one vertex");
    const double target = static_cast<double>(n) / spec.base.vertex_count();
    double worst = 0.0;
    for (int size : spec.part_sizes())
        worst = std::max(worst, std::abs(size - target));
    return worst / n;
}

namespace detail {

struct PartitionSearch {
    const Hypergraph* goal = nullptr;
    const Hypergraph* base = nullptr;
    const std::vector<std::vector<Vertex>>* class_members = nullptr;
    const std::vector<Edge>* quotient_edges = nullptr; // class-id tuples
    std::vector<int> class_to_part;
    std::vector<bool> part_used;
    std::vector<Vertex> isolated;
    std::optional<BlowupSpec> found;

    bool quotient_respected(std::size_t assigned) const {
        for (const auto& q : *quotient_edges) {
            bool complete = true;
            Edge image;
            for (int cls : q) {
                if (static_cast<std::size_t>(cls) >= assigned) { complete = false; break; }
                image.push_back(class_to_part[static_cast<std::size_t>(cls)]);
            }
            if (!complete) continue;
            std::sort(image.begin(), image.end());
            if (!base->contains_edge(image)) return false;
        }
        return true;
    }

    bool finish() {
        std::vector<int> assignment(static_cast<std::size_t>(goal->vertex_count()), -1);
        for (std::size_t cls = 0; cls < class_members->size(); ++cls)
            for (Vertex v : (*class_members)[cls])
                assignment[static_cast<std::size_t>(v)] = class_to_part[cls];
        if (isolated.empty()) {
            BlowupSpec spec(*base, assignment);
            if (blow_up(spec) == *goal) { found = spec; return true; }
            return false;
        }
        // isolated vertices can only live in a part all of whose base edges
        // are dead; try each home and let the exact rebuild decide
        for (int home = 0; home < base->vertex_count(); ++home) {
            for (Vertex v : isolated) assignment[static_cast<std::size_t>(v)] = home;
            BlowupSpec spec(*base, assignment);
            if (blow_up(spec) == *goal) { found = spec; return true; }
        }
        return false;
    }

    bool assign(std::size_t cls) {
        if (cls == class_members->size()) return finish();
        for (int part = 0; part < base->vertex_count(); ++part) {
            if (part_used[static_cast<std::size_t>(part)]) continue;
            class_to_part[cls] = part;
            part_used[static_cast<std::size_t>(part)] = true;
            if (quotient_respected(cls + 1) && assign(cls + 1)) return true;
            part_used[static_cast<std::size_t>(part)] = false;
        }
        return false;
    }
};

} // namespace detail

/// Recover the (unique up to relabeling of equal parts) blowup partition of G
/// over a pair-covering base, or none when G is not a blowup of it.
///
/// Vertices with equal links in G are clones of one base vertex, so the
/// link-equality classes of the non-isolated vertices are exactly the
/// nonempty live parts; classes are matched to base vertices by backtracking
/// and every candidate is confirmed by rebuilding the blowup. Isolated
/// vertices (possible when empty parts kill all edges through a base vertex)
/// are housed together in any part that reproduces G.
inline std::optional<BlowupSpec> recover_partition(const Hypergraph& g, const Hypergraph& base) {
    if (!base.covers_pairs()) throw UnsupportedBase("base graph must cover pairs");
    if (g.uniformity() != base.uniformity()) return std::nullopt;
    if (base.vertex_count() == 0) return g.vertex_count() == 0 && g.edge_count() == 0
                                             ? std::optional<BlowupSpec>(BlowupSpec(base, {}))
                                             : std::nullopt;

    std::map<std::vector<Edge>, std::vector<Vertex>> by_link;
    std::vector<Vertex> isolated;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<Edge> link_edges;
        for (const auto& e : g.edges()) {
            if (!std::binary_search(e.begin(), e.end(), v)) continue;
            Edge rest;
            for (Vertex u : e)
                if (u != v) rest.push_back(u);
            link_edges.push_back(std::move(rest));
        }
        if (link_edges.empty()) {
            isolated.push_back(v);
        } else {
            by_link[std::move(link_edges)].push_back(v);
        }
    }
    std::vector<std::vector<Vertex>> classes;
    classes.reserve(by_link.size());
    for (auto& entry : by_link) classes.push_back(entry.second);
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    if (static_cast<int>(classes.size()) > base.vertex_count()) return std::nullopt;

    std::vector<int> class_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t cls = 0; cls < classes.size(); ++cls)
        for (Vertex v : classes[cls]) class_of[static_cast<std::size_t>(v)] = static_cast<int>(cls);

    std::vector<Edge> quotient;
    for (const auto& e : g.edges()) {
        Edge q;
        for (Vertex v : e) q.push_back(class_of[static_cast<std::size_t>(v)]);
        std::sort(q.begin(), q.end());
        if (std::adjacent_find(q.begin(), q.end()) != q.end())
            return std::nullopt; // an edge meets a clone class twice
        quotient.push_back(std::move(q));
    }
    std::sort(quotient.begin(), quotient.end());
    quotient.erase(std::unique(quotient.begin(), quotient.end()), quotient.end());

    detail::PartitionSearch search;
    search.goal = &g;
    search.base = &base;
    search.class_members = &classes;
    search.quotient_edges = &quotient;
    search.class_to_part.assign(classes.size(), -1);
    search.part_used.assign(static_cast<std::size_t>(base.vertex_count()), false);
    search.isolated = isolated;
    search.assign(0);
    return search.found;
}

struct EdgeClassification {
    std::vector<Edge> good;    // F n B
    std::vector<Edge> bad;     // F \ B
    std::vector<Edge> missing; // B \ F
    /// sparse tuple counters: a = missing edges through I, b = bad edges
    /// through I, for |I| <= max_tuple; only nonzero entries are stored,
    /// keyed by the sorted tuple (the empty tuple gives the totals)
    std::map<Edge, long long> a_counts;
    std::map<Edge, long long> b_counts;
};

namespace detail {

inline void accumulate_tuples(const std::vector<Edge>& edges, int max_tuple,
                              std::map<Edge, long long>& counts) {
    Edge tuple;
    for (const auto& e : edges) {
        // all subsets of e with size <= max_tuple, by binary counter over r
        const int r = static_cast<int>(e.size());
        for (std::uint32_t bits = 0; bits < (1u << r); ++bits) {
            if (std::popcount(bits) > max_tuple) continue;
            tuple.clear();
            for (int i = 0; i < r; ++i)
                if (bits >> i & 1) tuple.push_back(e[static_cast<std::size_t>(i)]);
            ++counts[tuple];
        }
    }
}

} // namespace detail

/// Classify F's edges against the blowup B of the spec and count, for every
/// tuple I with |I| <= max_tuple, the missing and bad edges through I.
inline EdgeClassification classify_edges(const Hypergraph& g, const BlowupSpec& spec,
                                         int max_tuple = 2,
                                         std::size_t tuple_budget = 50'000'000) {
    if (g.vertex_count() != spec.target_vertex_count())
        throw DimensionMismatch("graph and spec vertex counts differ");
    if (max_tuple < 0 || max_tuple > g.uniformity())
        throw InvalidArgument("max_tuple must lie in [0, r]");
    const Hypergraph b = blow_up(spec);
    if (b.uniformity() != g.uniformity()) throw DimensionMismatch("uniformity mismatch");

    EdgeClassification out;
    std::set_intersection(g.edges().begin(), g.edges().end(), b.edges().begin(), b.edges().end(),
                          std::back_inserter(out.good));
    std::set_difference(g.edges().begin(), g.edges().end(), b.edges().begin(), b.edges().end(),
                        std::back_inserter(out.bad));
    std::set_difference(b.edges().begin(), b.edges().end(), g.edges().begin(), g.edges().end(),
                        std::back_inserter(out.missing));

    std::size_t tuples_per_edge = 0;
    for (int i = 0; i <= max_tuple; ++i)
        tuples_per_edge += static_cast<std::size_t>(binomial(g.uniformity(), i));
    if ((out.bad.size() + out.missing.size()) * tuples_per_edge > tuple_budget)
        throw MemoryBudget("tuple enumeration exceeds the configured cap");

    detail::accumulate_tuples(out.missing, max_tuple, out.a_counts);
    detail::accumulate_tuples(out.bad, max_tuple, out.b_counts);
    // totals are always present, even when zero
    out.a_counts.try_emplace(Edge{}, 0);
    out.b_counts.try_emplace(Edge{}, 0);
    return out;
}

} // namespace turanlab
