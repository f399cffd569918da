#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "turanlab/hypergraph.hpp"
#include "turanlab/lagrangian.hpp"

namespace turanlab {

/// Lexicographically smallest pair of support vertices sharing no edge of the
/// support-induced subgraph, or none when the support covers pairs.
inline std::optional<std::pair<Vertex, Vertex>> find_uncovered_pair(
    const Hypergraph& g, const std::vector<Vertex>& support) {
    std::vector<Vertex> sup = support;
    std::sort(sup.begin(), sup.end());
    sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
    for (Vertex v : sup)
        if (v < 0 || v >= g.vertex_count()) throw InvalidArgument("support vertex outside graph");

    for (std::size_t i = 0; i < sup.size(); ++i) {
        for (std::size_t j = i + 1; j < sup.size(); ++j) {
            bool covered = false;
            for (const auto& e : g.edges()) {
                if (!edge_subset(e, sup)) continue; // only edges of the induced subgraph
                if (std::binary_search(e.begin(), e.end(), sup[i]) &&
                    std::binary_search(e.begin(), e.end(), sup[j])) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return std::make_pair(sup[i], sup[j]);
        }
    }
    return std::nullopt;
}

namespace detail {

struct StepOutcome {
    std::vector<double> mu;
    int direction = 1; // 1 = weight kept on v1, 0 = weight kept on v2
    double lambda_v1 = 0.0, lambda_v2 = 0.0;
};

/// Shift the combined weight of an uncovered pair to the endpoint with the
/// larger density. lambda(mu_t) is affine in the shift because no
/// positive-weight edge contains both vertices, so only the endpoints matter.
inline StepOutcome symmetrize_step_impl(const WeightedHypergraph& w, Vertex v1, Vertex v2) {
    const Hypergraph& g = w.graph;
    if (v1 == v2 || v1 < 0 || v2 < 0 || v1 >= g.vertex_count() || v2 >= g.vertex_count())
        throw InvalidArgument("symmetrize_step needs two distinct vertices of the graph");
    const double total = w.mu[static_cast<std::size_t>(v1)] + w.mu[static_cast<std::size_t>(v2)];
    if (!(total > 0.0)) throw InvalidArgument("pair carries no weight");
    for (const auto& e : g.edges()) {
        if (!std::binary_search(e.begin(), e.end(), v1) ||
            !std::binary_search(e.begin(), e.end(), v2))
            continue;
        double rest = 1.0;
        for (Vertex u : e)
            if (u != v1 && u != v2) rest *= w.mu[static_cast<std::size_t>(u)];
        if (rest > 0.0) throw InvalidPair("pair is covered by a positive-weight edge");
    }

    StepOutcome out;
    std::vector<double> keep_v1 = w.mu;
    keep_v1[static_cast<std::size_t>(v1)] = total;
    keep_v1[static_cast<std::size_t>(v2)] = 0.0;
    std::vector<double> keep_v2 = w.mu;
    keep_v2[static_cast<std::size_t>(v1)] = 0.0;
    keep_v2[static_cast<std::size_t>(v2)] = total;
    out.lambda_v1 = lambda_eval<double>(g, std::span<const double>(keep_v1));
    out.lambda_v2 = lambda_eval<double>(g, std::span<const double>(keep_v2));
    if (out.lambda_v1 >= out.lambda_v2) { // tie keeps the lower-indexed vertex
        out.direction = 1;
        out.mu = std::move(keep_v1);
    } else {
        out.direction = 0;
        out.mu = std::move(keep_v2);
    }
    return out;
}

} // namespace detail

/// One weight shift across an uncovered pair; never decreases the density.
inline WeightedHypergraph symmetrize_step(const WeightedHypergraph& w, Vertex v1, Vertex v2) {
    auto out = detail::symmetrize_step_impl(w, v1, v2);
    return WeightedHypergraph(w.graph, std::move(out.mu));
}

struct SymmetrizationStep {
    Vertex v1 = 0, v2 = 0;
    int direction = 1; // 1 = kept v1, 0 = kept v2
    double lambda_before = 0.0;
    double lambda_after = 0.0;
};

struct SymmetrizationTrace {
    std::vector<SymmetrizationStep> steps;
    WeightedHypergraph final;
    bool covers_pairs_on_support = false;
    std::vector<Vertex> final_support;
};

/// Repeatedly shift weight across uncovered support pairs until the support
/// covers pairs. Each step zeroes one support vertex, so there are at most
/// n-1 steps, and the density never decreases along the trace.
inline SymmetrizationTrace symmetrize(const WeightedHypergraph& input) {
    WeightedHypergraph current = input;
    std::vector<SymmetrizationStep> steps;
    double lambda = lambda_eval(current);
    while (true) {
        std::vector<Vertex> support;
        for (Vertex v = 0; v < current.graph.vertex_count(); ++v)
            if (current.mu[static_cast<std::size_t>(v)] > 0.0) support.push_back(v);
        auto pair = find_uncovered_pair(current.graph, support);
        if (!pair) {
            // independent recheck through covers_pairs on the induced subgraph
            const bool covered = current.graph.induce(support).first.covers_pairs();
            return SymmetrizationTrace{std::move(steps), std::move(current), covered,
                                       std::move(support)};
        }
        auto out = detail::symmetrize_step_impl(current, pair->first, pair->second);
        SymmetrizationStep step;
        step.v1 = pair->first;
        step.v2 = pair->second;
        step.direction = out.direction;
        step.lambda_before = lambda;
        lambda = out.direction == 1 ? out.lambda_v1 : out.lambda_v2;
        step.lambda_after = lambda;
        steps.push_back(step);
        current = WeightedHypergraph(current.graph, std::move(out.mu));
    }
}

} // namespace turanlab
