#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <unordered_set>
#include <vector>

#include "turanlab/blowup.hpp"
#include "turanlab/hypergraph.hpp"
#include "turanlab/lagrangian.hpp"
#include "turanlab/rational.hpp"

namespace turanlab {

/// |F1 triangle F2| under the common labeling.
inline long long symmetric_difference_count(const Hypergraph& a, const Hypergraph& b) {
    if (a.uniformity() != b.uniformity() || a.vertex_count() != b.vertex_count())
        throw DimensionMismatch("symmetric difference needs matching r and n");
    std::size_t common = 0;
    auto ia = a.edges().begin();
    auto ib = b.edges().begin();
    while (ia != a.edges().end() && ib != b.edges().end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++common; ++ia; ++ib; }
    }
    return static_cast<long long>(a.edge_count() + b.edge_count() - 2 * common);
}

enum class DistanceMode { Exact, Heuristic };

struct DistanceResult {
    long long value = 0;
    std::optional<BlowupSpec> witness; // assignment achieving `value`
    bool exact = false;
    std::uint64_t nodes = 0;
};

struct DistanceOptions {
    DistanceMode mode = DistanceMode::Exact;
    std::uint64_t budget = 100'000'000; // exact mode: cap on m^n
    int restarts = 20;                  // heuristic mode
    std::uint64_t seed = 0;
};

namespace detail {

inline long long blowup_edit_cost(const Hypergraph& g, const Hypergraph& base,
                                  const std::vector<int>& assignment) {
    BlowupSpec spec(base, assignment);
    const auto sizes = spec.part_sizes();
    // |B| from the part-size products
    long long b_total = 0;
    for (const auto& e : base.edges()) {
        long long prod = 1;
        for (Vertex p : e) prod *= sizes[static_cast<std::size_t>(p)];
        b_total += prod;
    }
    long long good = 0, bad = 0;
    std::vector<int> seen(static_cast<std::size_t>(base.vertex_count()), -1);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        Edge part_tuple;
        bool transversal = true;
        for (Vertex v : e) {
            const int p = assignment[static_cast<std::size_t>(v)];
            if (seen[static_cast<std::size_t>(p)] == static_cast<int>(i)) { transversal = false; break; }
            seen[static_cast<std::size_t>(p)] = static_cast<int>(i);
            part_tuple.push_back(p);
        }
        if (!transversal) { ++bad; continue; }
        std::sort(part_tuple.begin(), part_tuple.end());
        if (base.contains_edge(part_tuple)) ++good;
        else ++bad;
    }
    return bad + (b_total - good);
}

struct ExactDistanceSearch {
    const Hypergraph* g = nullptr;
    const Hypergraph* base = nullptr;
    int r = 0, n = 0, m = 0;
    std::vector<Vertex> order;              // vertices, decreasing degree
    std::vector<int> part_of;               // by vertex id, -1 = unassigned
    std::vector<Vertex> assigned;           // prefix of `order`
    std::unordered_set<std::uint64_t> f_masks;
    std::unordered_set<std::uint64_t> base_masks;
    std::vector<std::vector<std::size_t>> edges_at; // vertex -> F-edge indices
    std::vector<int> unassigned_in_edge;
    long long best = 0;
    std::vector<int> best_assignment;
    std::uint64_t nodes = 0;

    // count of newly forced edits when v (already in part_of) joins `assigned`
    long long forced_delta(Vertex v) {
        long long delta = 0;
        for (std::size_t ei : edges_at[static_cast<std::size_t>(v)]) {
            if (--unassigned_in_edge[ei] == 0) {
                // F-edge fully assigned: an edit unless it maps to a base edge
                Edge parts;
                bool transversal = true;
                for (Vertex u : g->edge(ei)) {
                    const int p = part_of[static_cast<std::size_t>(u)];
                    if (std::find(parts.begin(), parts.end(), p) != parts.end()) {
                        transversal = false;
                        break;
                    }
                    parts.push_back(p);
                }
                if (!transversal) { ++delta; continue; }
                std::sort(parts.begin(), parts.end());
                Edge sorted_parts = parts;
                std::uint64_t pm = 0;
                for (int p : sorted_parts) pm |= std::uint64_t{1} << p;
                if (!base_masks.count(pm)) ++delta;
            }
        }
        // newly complete transversal base-edge r-sets not in F: choose r-1
        // previously assigned vertices to pair with v
        if (static_cast<int>(assigned.size()) >= r - 1) delta += missing_through(v, 0, r - 1);
        return delta;
    }

    std::vector<Vertex> pick_stack;

    // accumulates, over (r-1)-subsets of `assigned`, the transversal
    // base-edge r-sets through v that are not F-edges
    long long missing_through(Vertex v, std::size_t start, int remaining) {
        if (remaining == 0) {
            std::uint64_t vert_mask = std::uint64_t{1} << v;
            std::uint64_t part_mask = std::uint64_t{1} << part_of[static_cast<std::size_t>(v)];
            for (Vertex u : pick_stack) {
                const int q = part_of[static_cast<std::size_t>(u)];
                if (part_mask >> q & 1) return 0;
                part_mask |= std::uint64_t{1} << q;
                vert_mask |= std::uint64_t{1} << u;
            }
            if (!base_masks.count(part_mask)) return 0;
            return f_masks.count(vert_mask) ? 0 : 1;
        }
        long long total = 0;
        for (std::size_t i = start; i + static_cast<std::size_t>(remaining) <= assigned.size();
             ++i) {
            pick_stack.push_back(assigned[i]);
            total += missing_through(v, i + 1, remaining - 1);
            pick_stack.pop_back();
        }
        return total;
    }

    void undo(Vertex v) {
        for (std::size_t ei : edges_at[static_cast<std::size_t>(v)]) ++unassigned_in_edge[ei];
    }

    void dfs(std::size_t depth, long long edits) {
        if (edits >= best) return; // bound: forced edits only grow
        if (depth == order.size()) {
            best = edits;
            best_assignment = part_of;
            return;
        }
        const Vertex v = order[depth];
        for (int p = 0; p < m; ++p) {
            ++nodes;
            part_of[static_cast<std::size_t>(v)] = p;
            const long long delta = forced_delta(v);
            assigned.push_back(v);
            dfs(depth + 1, edits + delta);
            assigned.pop_back();
            undo(v);
            part_of[static_cast<std::size_t>(v)] = -1;
        }
    }
};

inline std::uint64_t mask_of(const Edge& e) {
    std::uint64_t m = 0;
    for (Vertex v : e) m |= std::uint64_t{1} << v;
    return m;
}

} // namespace detail

/// Minimum |F triangle B| over all blowups B of `base` on V(F). Exact mode
/// enumerates all m^n assignments depth-first (vertices in decreasing degree
/// order, branch abandoned once forced edits reach the incumbent); heuristic
/// mode runs seeded steepest-descent restarts over single-vertex
/// reassignments and reports a certified upper bound.
inline DistanceResult distance_to_blowups(const Hypergraph& g, const Hypergraph& base,
                                          const DistanceOptions& opts = {}) {
    if (g.uniformity() != base.uniformity())
        throw DimensionMismatch("graph and base uniformity differ");
    const int n = g.vertex_count(), m = base.vertex_count();
    if (n > 64 || m > 64) throw InvalidArgument("distance search supports n, m <= 64");
    if (n == 0) {
        BlowupSpec empty_spec(base, {});
        return DistanceResult{0, empty_spec, true, 0};
    }

    // descent from seeded random assignments; also the incumbent seed for
    // the exact search
    std::vector<int> best_assign(static_cast<std::size_t>(n), 0);
    long long best_cost = detail::blowup_edit_cost(g, base, best_assign);
    const int restarts = opts.mode == DistanceMode::Heuristic ? opts.restarts : 3;
    for (int restart = 0; restart < restarts; ++restart) {
        std::vector<int> assign(static_cast<std::size_t>(n));
        std::mt19937_64 rng(detail::splitmix64(opts.seed ^ (0xD15EA5E + restart)));
        std::uniform_int_distribution<int> pick(0, m - 1);
        for (int& a : assign) a = pick(rng);
        long long cost = detail::blowup_edit_cost(g, base, assign);
        long long sideways = 0;
        const long long sideways_cap = static_cast<long long>(n) * n;
        while (sideways <= sideways_cap) {
            long long move_cost = cost;
            int move_v = -1, move_p = -1;
            for (int v = 0; v < n; ++v) {
                const int old = assign[static_cast<std::size_t>(v)];
                for (int p = 0; p < m; ++p) {
                    if (p == old) continue;
                    assign[static_cast<std::size_t>(v)] = p;
                    const long long c = detail::blowup_edit_cost(g, base, assign);
                    if (c < move_cost) { move_cost = c; move_v = v; move_p = p; }
                }
                assign[static_cast<std::size_t>(v)] = old;
            }
            if (move_v < 0) break; // strict local optimum
            assign[static_cast<std::size_t>(move_v)] = move_p;
            if (move_cost == cost) ++sideways;
            else sideways = 0;
            cost = move_cost;
        }
        if (cost < best_cost) { best_cost = cost; best_assign = assign; }
    }

    if (opts.mode == DistanceMode::Heuristic) {
        return DistanceResult{best_cost, BlowupSpec(base, best_assign), false, 0};
    }

    // feasibility gate for full enumeration
    long double space = 1.0L;
    for (int i = 0; i < n; ++i) {
        space *= m;
        if (space > static_cast<long double>(opts.budget))
            throw BudgetExceeded("exact distance: m^n exceeds budget, use heuristic mode");
    }

    detail::ExactDistanceSearch search;
    search.g = &g;
    search.base = &base;
    search.r = g.uniformity();
    search.n = n;
    search.m = m;
    search.part_of.assign(static_cast<std::size_t>(n), -1);
    search.order.resize(static_cast<std::size_t>(n));
    std::iota(search.order.begin(), search.order.end(), 0);
    std::stable_sort(search.order.begin(), search.order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        search.f_masks.insert(detail::mask_of(g.edge(i)));
    for (std::size_t i = 0; i < base.edge_count(); ++i)
        search.base_masks.insert(detail::mask_of(base.edge(i)));
    search.edges_at.resize(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        for (Vertex v : g.edge(i)) search.edges_at[static_cast<std::size_t>(v)].push_back(i);
    search.unassigned_in_edge.assign(g.edge_count(), g.uniformity());
    search.best = best_cost + 1; // allow rediscovering the seed's witness
    search.best_assignment = best_assign;
    search.dfs(0, 0);

    const long long value = std::min(search.best, best_cost);
    const auto& witness = search.best <= best_cost ? search.best_assignment : best_assign;
    return DistanceResult{value, BlowupSpec(base, witness), true, search.nodes};
}

/// Weighted symmetric-difference density d' of two blowups on a common vertex
/// set, evaluated exactly: an upper bound witness for the weighted distance
/// between the underlying weighted graphs. The common weights must restrict
/// to both blowup partitions; when omitted they are derived by splitting the
/// first graph's weights uniformly within each part.
inline Rational weighted_distance_witness(
    const RationalWeightedHypergraph& w1, const RationalWeightedHypergraph& w2,
    const BlowupSpec& spec1, const BlowupSpec& spec2,
    const std::optional<std::vector<Rational>>& common_mu = std::nullopt) {
    if (spec1.base != w1.graph || spec2.base != w2.graph)
        throw InvalidArgument("specs must blow up the weighted graphs' own base graphs");
    if (spec1.target_vertex_count() != spec2.target_vertex_count())
        throw DimensionMismatch("blowups must share a vertex set");
    const int n = spec1.target_vertex_count();

    std::vector<Rational> mu;
    if (common_mu) {
        mu = *common_mu;
        if (static_cast<int>(mu.size()) != n) throw DimensionMismatch("common mu length mismatch");
    } else {
        const auto sizes = spec1.part_sizes();
        mu.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            const int part = spec1.assignment[static_cast<std::size_t>(v)];
            mu[static_cast<std::size_t>(v)] =
                w1.mu[static_cast<std::size_t>(part)] / sizes[static_cast<std::size_t>(part)];
        }
    }

    for (const Rational& x : mu)
        if (x < 0) throw InconsistentWeights("negative common weight");
    auto check_sums = [&](const BlowupSpec& spec, const std::vector<Rational>& part_mu) {
        std::vector<Rational> sums(part_mu.size(), Rational(0));
        for (int v = 0; v < n; ++v)
            sums[static_cast<std::size_t>(spec.assignment[static_cast<std::size_t>(v)])] +=
                mu[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < part_mu.size(); ++i)
            if (sums[i] != part_mu[i])
                throw InconsistentWeights("common weights do not restrict to the part weights");
    };
    check_sums(spec1, w1.mu);
    check_sums(spec2, w2.mu);

    const Hypergraph b1 = blow_up(spec1);
    const Hypergraph b2 = blow_up(spec2);
    Rational total(0);
    auto add_products = [&](const Hypergraph& from, const Hypergraph& other) {
        for (const auto& e : from.edges()) {
            if (other.contains_edge(e)) continue;
            Rational prod(1);
            for (Vertex v : e) prod *= mu[static_cast<std::size_t>(v)];
            total += prod;
        }
    };
    add_products(b1, b2);
    add_products(b2, b1);
    return total;
}

struct TransferReport {
    long long lhs = 0;           // exact edit distance to the blowup family
    Rational d_prime;            // witness value for the weighted distance at xi
    Rational rhs;                // (r! n / (n - r^2)) C(n,r) d'
    bool pass = false;
    std::optional<BlowupSpec> witness;
};

/// Instance-level check of the weighted-to-unweighted distance transfer
/// inequality. The witness d' comes from the optimal assignment's blowup
/// under uniform weights, so a failure here would indicate a bug, not new
/// mathematics.
inline TransferReport check_distance_transfer(const Hypergraph& g, const Hypergraph& base,
                                              const DistanceOptions& opts = {}) {
    const int r = g.uniformity(), n = g.vertex_count();
    if (n <= r * r)
        throw InvalidArgument("transfer inequality needs n > r^2");
    DistanceOptions exact_opts = opts;
    exact_opts.mode = DistanceMode::Exact;
    const DistanceResult dist = distance_to_blowups(g, base, exact_opts);

    TransferReport rep;
    rep.lhs = dist.value;
    rep.witness = dist.witness;
    rep.d_prime = Rational(dist.value, int_pow(n, r));
    Rational factor(BigInt(n), BigInt(n - r * r));
    BigInt r_fact = 1;
    for (int i = 2; i <= r; ++i) r_fact *= i;
    rep.rhs = Rational(r_fact) * factor * Rational(binomial(n, r)) * rep.d_prime;
    rep.pass = Rational(rep.lhs) <= rep.rhs;
    return rep;
}

} // namespace turanlab
