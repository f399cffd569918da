#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <thread>
#include <vector>

#include "turanlab/brute_force.hpp"
#include "turanlab/hypergraph.hpp"
#include "turanlab/patterns.hpp"

namespace turanlab {

enum class ForbiddenPattern { SigmaMember, GeneralizedTriangle, Clique, ThinPair };

inline const char* forbidden_pattern_name(ForbiddenPattern p) {
    switch (p) {
        case ForbiddenPattern::SigmaMember: return "sigma";
        case ForbiddenPattern::GeneralizedTriangle: return "triangle";
        case ForbiddenPattern::Clique: return "clique";
        case ForbiddenPattern::ThinPair: return "thin";
    }
    return "?";
}

struct PatternSpec {
    ForbiddenPattern kind = ForbiddenPattern::SigmaMember;
    int clique_order = 3; // only for Clique
};

struct SearchOptions {
    std::uint64_t node_budget = 1'000'000'000;
    bool parallel = false;
    bool deterministic = false; // forces the sequential schedule
    int threads = 0;            // 0 = hardware concurrency
    int n_cap_override = 0;     // 0 = default caps (r=3: n<=8, r=2: n<=10)
};

struct SearchResult {
    int n = 0, r = 0;
    PatternSpec pattern;
    long long max_edges = 0;
    Hypergraph witness = Hypergraph::empty(2, 0);
    std::uint64_t nodes_explored = 0;
    bool certified = false; // true only when the search space was exhausted
};

/// floor(n/3) * floor((n+1)/3) * floor((n+2)/3): the balanced complete
/// 3-partite edge count, the exact Turan number of the r=3 family.
inline long long bollobas_formula(int n) {
    if (n < 3) throw InvalidArgument("bollobas_formula requires n >= 3");
    return static_cast<long long>(n / 3) * ((n + 1) / 3) * ((n + 2) / 3);
}

namespace detail {

/// colex order on equal-size subsets: compare reversed tuples
inline bool colex_less(const Edge& a, const Edge& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

struct ThinPairRecord {
    std::uint64_t diff;  // symmetric difference of the two edges
    std::uint64_t core;  // their (r-1)-vertex intersection
};

/// Incremental freeness oracle over a growing edge set (vertex masks).
class FreenessState {
public:
    FreenessState(int n, int r, PatternSpec pattern)
        : n_(n), r_(r), pattern_(pattern), adj_(pattern.kind == ForbiddenPattern::Clique
                                                   ? static_cast<std::size_t>(n)
                                                   : 0) {}

    /// Would adding `mask` keep the graph free?
    bool can_add(std::uint64_t mask) const {
        switch (pattern_.kind) {
            case ForbiddenPattern::ThinPair: {
                for (std::uint64_t e : edges_)
                    if (std::popcount(e & mask) == r_ - 1) return false;
                return true;
            }
            case ForbiddenPattern::SigmaMember:
            case ForbiddenPattern::GeneralizedTriangle: {
                const bool need_disjoint = pattern_.kind == ForbiddenPattern::GeneralizedTriangle;
                // existing thin pair completed by the new edge as the cover C
                for (const auto& pr : pairs_) {
                    if ((pr.diff & ~mask) != 0) continue;
                    if (need_disjoint && (pr.core & mask) != 0) continue;
                    return false;
                }
                // new thin pairs (mask, e) checked against every potential
                // cover; neither member of a pair can cover it, so scanning
                // the existing edges suffices
                for (std::uint64_t e : edges_) {
                    if (std::popcount(e & mask) != r_ - 1) continue;
                    const std::uint64_t diff = e ^ mask;
                    const std::uint64_t core = e & mask;
                    for (std::uint64_t c : edges_) {
                        if ((diff & ~c) != 0) continue;
                        if (need_disjoint && (core & c) != 0) continue;
                        return false;
                    }
                }
                return true;
            }
            case ForbiddenPattern::Clique: {
                // K_t through the new edge: a K_{t-2} inside the common
                // neighborhood of its endpoints
                const int u = std::countr_zero(mask);
                const int v = std::countr_zero(mask & (mask - 1));
                return !clique_in(adj_[static_cast<std::size_t>(u)] &
                                      adj_[static_cast<std::size_t>(v)],
                                  pattern_.clique_order - 2);
            }
        }
        return true;
    }

    void add(std::uint64_t mask) {
        if (pattern_.kind == ForbiddenPattern::SigmaMember ||
            pattern_.kind == ForbiddenPattern::GeneralizedTriangle) {
            std::size_t added = 0;
            for (std::uint64_t e : edges_) {
                if (std::popcount(e & mask) == r_ - 1) {
                    pairs_.push_back({e ^ mask, e & mask});
                    ++added;
                }
            }
            pairs_added_.push_back(added);
        } else if (pattern_.kind == ForbiddenPattern::Clique) {
            const int u = std::countr_zero(mask);
            const int v = std::countr_zero(mask & (mask - 1));
            adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
            adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        }
        edges_.push_back(mask);
    }

    void remove_last() {
        const std::uint64_t mask = edges_.back();
        edges_.pop_back();
        if (pattern_.kind == ForbiddenPattern::SigmaMember ||
            pattern_.kind == ForbiddenPattern::GeneralizedTriangle) {
            pairs_.resize(pairs_.size() - pairs_added_.back());
            pairs_added_.pop_back();
        } else if (pattern_.kind == ForbiddenPattern::Clique) {
            const int u = std::countr_zero(mask);
            const int v = std::countr_zero(mask & (mask - 1));
            adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
            adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
        }
    }

    std::size_t size() const { return edges_.size(); }
    const std::vector<std::uint64_t>& edges() const { return edges_; }

private:
    bool clique_in(std::uint64_t candidates, int need) const {
        if (need <= 0) return true;
        if (std::popcount(candidates) < need) return false;
        std::uint64_t rest = candidates;
        while (rest) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (clique_in(rest & adj_[static_cast<std::size_t>(v)], need - 1)) return true;
        }
        return false;
    }

    int n_, r_;
    PatternSpec pattern_;
    std::vector<std::uint64_t> edges_;
    std::vector<ThinPairRecord> pairs_;
    std::vector<std::size_t> pairs_added_;
    std::vector<std::uint64_t> adj_;
};

struct BranchSearch {
    const std::vector<std::uint64_t>* candidates = nullptr;
    FreenessState* state = nullptr;
    long long best = 0;
    std::vector<std::uint64_t> best_edges;
    std::uint64_t nodes = 0, budget = 0;
    bool exceeded = false;

    void dfs(std::size_t index) {
        if (exceeded) return;
        if (++nodes > budget) { exceeded = true; return; }
        if (static_cast<long long>(state->size()) > best) {
            best = static_cast<long long>(state->size());
            best_edges = state->edges();
        }
        if (index == candidates->size()) return;
        // bound: everything remaining cannot beat the incumbent
        if (static_cast<long long>(state->size() + (candidates->size() - index)) <= best) return;
        const std::uint64_t mask = (*candidates)[index];
        if (state->can_add(mask)) {
            state->add(mask);
            dfs(index + 1);
            state->remove_last();
        }
        dfs(index + 1);
    }
};

inline Edge mask_to_edge(std::uint64_t mask) {
    Edge e;
    while (mask) {
        e.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return e;
}

/// Complete balanced multipartite graph: all part-transversal r-sets over
/// `parts` classes (vertex v joins class v mod parts). Free of every
/// sigma-family member because clone pairs are never covered.
inline std::vector<std::uint64_t> balanced_multipartite_masks(int n, int r, int parts) {
    std::vector<std::vector<Vertex>> classes(static_cast<std::size_t>(parts));
    for (Vertex v = 0; v < n; ++v) classes[static_cast<std::size_t>(v % parts)].push_back(v);
    std::vector<std::uint64_t> out;
    // choose r distinct classes, then one vertex from each
    std::vector<int> which(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) which[static_cast<std::size_t>(i)] = i;
    if (r > parts) return out;
    while (true) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
        bool ok = true;
        for (int i = 0; i < r; ++i)
            if (classes[static_cast<std::size_t>(which[static_cast<std::size_t>(i)])].empty())
                ok = false;
        if (ok) {
            while (true) {
                std::uint64_t mask = 0;
                for (int i = 0; i < r; ++i)
                    mask |= std::uint64_t{1}
                            << classes[static_cast<std::size_t>(which[static_cast<std::size_t>(i)])]
                                      [idx[static_cast<std::size_t>(i)]];
                out.push_back(mask);
                int pos = r - 1;
                while (pos >= 0) {
                    const auto& cls =
                        classes[static_cast<std::size_t>(which[static_cast<std::size_t>(pos)])];
                    if (++idx[static_cast<std::size_t>(pos)] < cls.size()) break;
                    idx[static_cast<std::size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
            }
        }
        int i = r - 1;
        while (i >= 0 && which[static_cast<std::size_t>(i)] == parts - r + i) --i;
        if (i < 0) break;
        ++which[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            which[static_cast<std::size_t>(j)] = which[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

} // namespace detail

/// Exact maximum edge count of a pattern-free r-graph on n vertices by
/// branch and bound over candidate edges in colex order. The incumbent is
/// seeded by a greedy pass and by the balanced multipartite construction
/// (Turan graph for cliques); `certified` reports whether the search space
/// was exhausted within the budget.
inline SearchResult max_free_edges(int n, int r, PatternSpec pattern,
                                   const SearchOptions& opts = {}) {
    if (r != 2 && r != 3) throw InvalidArgument("search supports r in {2, 3}");
    const int cap = opts.n_cap_override > 0 ? opts.n_cap_override : (r == 3 ? 8 : 10);
    if (n < r || n > cap)
        throw InvalidArgument("n out of the configured range [r, " + std::to_string(cap) + "]");
    if (pattern.kind == ForbiddenPattern::Clique) {
        if (r != 2) throw InvalidArgument("clique pattern requires r = 2");
        if (pattern.clique_order < 2) throw InvalidArgument("clique order must be >= 2");
    }

    std::vector<Edge> subsets = all_subsets(n, r);
    std::sort(subsets.begin(), subsets.end(), detail::colex_less);
    std::vector<std::uint64_t> candidates;
    candidates.reserve(subsets.size());
    for (const auto& s : subsets) {
        std::uint64_t mask = 0;
        for (Vertex v : s) mask |= std::uint64_t{1} << v;
        candidates.push_back(mask);
    }

    // incumbent seeds
    std::vector<std::uint64_t> seed_edges;
    {
        detail::FreenessState greedy(n, r, pattern);
        for (std::uint64_t mask : candidates)
            if (greedy.can_add(mask)) greedy.add(mask);
        seed_edges = greedy.edges();
    }
    if (pattern.kind == ForbiddenPattern::SigmaMember ||
        pattern.kind == ForbiddenPattern::GeneralizedTriangle) {
        auto multipartite = detail::balanced_multipartite_masks(n, r, r);
        if (multipartite.size() > seed_edges.size()) seed_edges = std::move(multipartite);
    } else if (pattern.kind == ForbiddenPattern::Clique && pattern.clique_order > 2) {
        auto turan = detail::balanced_multipartite_masks(n, 2, pattern.clique_order - 1);
        if (turan.size() > seed_edges.size()) seed_edges = std::move(turan);
    }

    SearchResult result;
    result.n = n;
    result.r = r;
    result.pattern = pattern;

    long long best = static_cast<long long>(seed_edges.size());
    std::vector<std::uint64_t> best_edges = seed_edges;
    std::uint64_t total_nodes = 0;
    bool exceeded = false;

    const bool run_parallel = opts.parallel && !opts.deterministic && candidates.size() > 8;
    if (!run_parallel) {
        detail::FreenessState state(n, r, pattern);
        detail::BranchSearch search;
        search.candidates = &candidates;
        search.state = &state;
        search.best = best;
        search.best_edges = best_edges;
        search.budget = opts.node_budget;
        search.dfs(0);
        best = search.best;
        best_edges = search.best_edges;
        total_nodes = search.nodes;
        exceeded = search.exceeded;
    } else {
        // Fixed prefix split over the first `span` include/exclude decisions.
        // Tasks do not share incumbents, so results are schedule-independent.
        const int span = 4;
        const std::size_t task_count = std::size_t{1} << span;
        struct TaskOutcome {
            long long best = -1;
            std::vector<std::uint64_t> edges;
            std::uint64_t nodes = 0;
            bool exceeded = false;
        };
        std::vector<TaskOutcome> outcomes(task_count);
        std::atomic<std::size_t> next{0};
        const std::uint64_t per_task_budget = opts.node_budget / task_count;
        auto worker = [&]() {
            while (true) {
                const std::size_t task = next.fetch_add(1);
                if (task >= task_count) return;
                detail::FreenessState state(n, r, pattern);
                bool feasible = true;
                for (int d = 0; d < span; ++d) {
                    if (!(task >> d & 1)) continue;
                    if (!state.can_add(candidates[static_cast<std::size_t>(d)])) {
                        feasible = false;
                        break;
                    }
                    state.add(candidates[static_cast<std::size_t>(d)]);
                }
                if (!feasible) continue;
                detail::BranchSearch search;
                search.candidates = &candidates;
                search.state = &state;
                search.best = best;
                search.best_edges = best_edges;
                search.budget = per_task_budget;
                search.dfs(static_cast<std::size_t>(span));
                outcomes[task] = {search.best, std::move(search.best_edges), search.nodes,
                                  search.exceeded};
            }
        };
        int threads = opts.threads > 0 ? opts.threads
                                       : static_cast<int>(std::thread::hardware_concurrency());
        threads = std::max(1, threads);
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (const auto& outcome : outcomes) {
            if (outcome.best < 0) continue;
            total_nodes += outcome.nodes;
            exceeded = exceeded || outcome.exceeded;
            if (outcome.best > best) {
                best = outcome.best;
                best_edges = outcome.edges;
            }
        }
    }

    std::vector<Edge> witness_edges;
    witness_edges.reserve(best_edges.size());
    for (std::uint64_t mask : best_edges) witness_edges.push_back(detail::mask_to_edge(mask));
    result.max_edges = best;
    result.witness = Hypergraph(r, n, std::move(witness_edges));
    result.nodes_explored = total_nodes;
    result.certified = !exceeded;
    return result;
}

struct WitnessReport {
    long long counted_edges = 0;
    bool edge_count_ok = false;
    bool freeness_ok = false;
};

/// Re-verify a search result with the definition-literal exhaustive scans.
inline WitnessReport extremal_witness_check(const SearchResult& res) {
    WitnessReport rep;
    rep.counted_edges = static_cast<long long>(res.witness.edge_count());
    rep.edge_count_ok = rep.counted_edges == res.max_edges;
    switch (res.pattern.kind) {
        case ForbiddenPattern::SigmaMember:
            rep.freeness_ok = !brute::has_sigma_member(res.witness);
            break;
        case ForbiddenPattern::GeneralizedTriangle:
            rep.freeness_ok = !brute::has_generalized_triangle(res.witness);
            break;
        case ForbiddenPattern::Clique:
            rep.freeness_ok = !brute::has_clique(res.witness, res.pattern.clique_order);
            break;
        case ForbiddenPattern::ThinPair:
            rep.freeness_ok = !brute::has_thin_violation(res.witness);
            break;
    }
    return rep;
}

} // namespace turanlab
