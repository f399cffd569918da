#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "turanlab/hypergraph.hpp"
#include "turanlab/rational.hpp"
#include "turanlab/steiner.hpp"

namespace turanlab {

namespace detail {

template <class W>
void check_simplex(const Hypergraph& g, std::span<const W> mu) {
    if (static_cast<int>(mu.size()) != g.vertex_count())
        throw DimensionMismatch("weight vector length != vertex count");
    W sum{0};
    for (const W& w : mu) {
        if (w < W{0}) throw ValidationError("negative vertex weight");
        sum += w;
    }
    if constexpr (std::is_same_v<W, double>) {
        if (std::abs(sum - 1.0) > 1e-12) throw ValidationError("weights must sum to 1");
    } else {
        if (sum != W{1}) throw ValidationError("weights must sum to 1 exactly");
    }
}

} // namespace detail

/// A hypergraph with a probability vector on its vertices. W is double for
/// the optimizer and Rational for exact certification.
template <class W>
struct BasicWeightedHypergraph {
    Hypergraph graph;
    std::vector<W> mu;

    BasicWeightedHypergraph(Hypergraph g, std::vector<W> weights)
        : graph(std::move(g)), mu(std::move(weights)) {
        detail::check_simplex<W>(graph, mu);
    }

    static BasicWeightedHypergraph uniform(Hypergraph g) {
        const int n = g.vertex_count();
        if (n == 0) throw InvalidArgument("uniform weights need at least one vertex");
        std::vector<W> mu;
        if constexpr (std::is_same_v<W, double>)
            mu.assign(static_cast<std::size_t>(n), 1.0 / n);
        else
            mu.assign(static_cast<std::size_t>(n), Rational(1, n));
        return BasicWeightedHypergraph(std::move(g), std::move(mu));
    }
};

using WeightedHypergraph = BasicWeightedHypergraph<double>;
using RationalWeightedHypergraph = BasicWeightedHypergraph<Rational>;

/// Edge density of a weighted graph: sum over edges of the product of the
/// vertex weights.
template <class W>
W lambda_eval(const Hypergraph& g, std::span<const W> mu) {
    detail::check_simplex<W>(g, mu);
    W total{0};
    for (const auto& e : g.edges()) {
        W prod{1};
        for (Vertex v : e) prod *= mu[static_cast<std::size_t>(v)];
        total += prod;
    }
    return total;
}

template <class W>
W lambda_eval(const Hypergraph& g, const std::vector<W>& mu) {
    return lambda_eval<W>(g, std::span<const W>(mu.data(), mu.size()));
}

template <class W>
W lambda_eval(const BasicWeightedHypergraph<W>& w) {
    return lambda_eval<W>(w.graph, std::span<const W>(w.mu));
}

/// Gradient: component i sums, over the link of i, the weight products of the
/// remaining r-1 vertices. Computed with per-edge prefix/suffix products.
template <class W>
std::vector<W> lambda_grad(const Hypergraph& g, std::span<const W> mu) {
    detail::check_simplex<W>(g, mu);
    std::vector<W> grad(static_cast<std::size_t>(g.vertex_count()), W{0});
    const int r = g.uniformity();
    std::vector<W> prefix(static_cast<std::size_t>(r) + 1), suffix(static_cast<std::size_t>(r) + 1);
    for (const auto& e : g.edges()) {
        prefix[0] = W{1};
        for (int i = 0; i < r; ++i)
            prefix[static_cast<std::size_t>(i + 1)] =
                prefix[static_cast<std::size_t>(i)] * mu[static_cast<std::size_t>(e[static_cast<std::size_t>(i)])];
        suffix[static_cast<std::size_t>(r)] = W{1};
        for (int i = r - 1; i >= 0; --i)
            suffix[static_cast<std::size_t>(i)] =
                suffix[static_cast<std::size_t>(i + 1)] * mu[static_cast<std::size_t>(e[static_cast<std::size_t>(i)])];
        for (int i = 0; i < r; ++i)
            grad[static_cast<std::size_t>(e[static_cast<std::size_t>(i)])] +=
                prefix[static_cast<std::size_t>(i)] * suffix[static_cast<std::size_t>(i + 1)];
    }
    return grad;
}

template <class W>
std::vector<W> lambda_grad(const Hypergraph& g, const std::vector<W>& mu) {
    return lambda_grad<W>(g, std::span<const W>(mu.data(), mu.size()));
}

/// First-order stationarity residual at an interior-supported point: the
/// maximum over the support of |d_i lambda - r lambda|.
template <class W>
W critical_residual(const Hypergraph& g, std::span<const W> mu) {
    const W lambda = lambda_eval<W>(g, mu);
    const auto grad = lambda_grad<W>(g, mu);
    const W target = W(g.uniformity()) * lambda;
    W worst{0};
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (!(mu[i] > W{0})) continue;
        W dev = grad[i] - target;
        if (dev < W{0}) dev = -dev;
        if (dev > worst) worst = dev;
    }
    return worst;
}

template <class W>
W critical_residual(const Hypergraph& g, const std::vector<W>& mu) {
    return critical_residual<W>(g, std::span<const W>(mu.data(), mu.size()));
}

struct OptResult {
    double value = 0.0;
    std::vector<double> point;
    double kkt_residual = 0.0;
    int restarts_used = 0;
    std::vector<Vertex> support;
    bool converged = true; // false when some restart hit the iteration cap
};

struct OptimizerOptions {
    int restarts = 50;
    int max_iterations = 10'000;
    double tol = 1e-10;
    std::uint64_t seed = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// KKT residual with inactive constraints: on-support |d_i - r lambda|,
/// off-support positive part of d_i - r lambda.
inline double kkt_residual_at(const Hypergraph& g, std::span<const double> mu) {
    const double lambda = lambda_eval<double>(g, mu);
    const auto grad = lambda_grad<double>(g, mu);
    const double target = g.uniformity() * lambda;
    double worst = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        const double dev = (mu[i] > 1e-12) ? std::abs(grad[i] - target)
                                           : std::max(0.0, grad[i] - target);
        worst = std::max(worst, dev);
    }
    return worst;
}

struct AscentOutcome {
    std::vector<double> point;
    double value = 0.0;
    bool converged = false;
};

/// Multiplicative (replicator-style) ascent with monotone safeguarding: the
/// step mu_i <- mu_i * grad_i / (r lambda) never decreases lambda for a
/// polynomial with nonnegative coefficients; on a floating-point decrease we
/// halve back toward the previous point.
inline AscentOutcome multiplicative_ascent(const Hypergraph& g, std::vector<double> mu,
                                           int max_iterations, double tol) {
    AscentOutcome out;
    double value = lambda_eval<double>(g, std::span<const double>(mu));
    for (int iter = 0; iter < max_iterations; ++iter) {
        const auto grad = lambda_grad<double>(g, std::span<const double>(mu));
        double denom = 0.0;
        for (std::size_t i = 0; i < mu.size(); ++i) denom += mu[i] * grad[i];
        if (denom <= 0.0) { out.converged = true; break; } // no edge has weight: stationary
        std::vector<double> next(mu.size());
        for (std::size_t i = 0; i < mu.size(); ++i) next[i] = mu[i] * grad[i] / denom;
        double next_value = lambda_eval<double>(g, std::span<const double>(next));
        int halvings = 0;
        while (next_value < value && halvings < 60) {
            for (std::size_t i = 0; i < mu.size(); ++i) next[i] = 0.5 * (next[i] + mu[i]);
            next_value = lambda_eval<double>(g, std::span<const double>(next));
            ++halvings;
        }
        if (next_value < value) { out.converged = true; break; } // float plateau
        const double delta = next_value - value;
        mu = std::move(next);
        value = next_value;
        if (delta <= tol) { out.converged = true; break; }
    }
    out.point = std::move(mu);
    out.value = value;
    return out;
}

} // namespace detail

/// Seeded multistart maximization of the Lagrangian over the simplex.
/// Restart 0 starts from the uniform point, the rest from Dirichlet(1)
/// samples. The returned value is a lower bound on lambda(F) with KKT
/// residual evidence; global optimality is not certified.
inline OptResult maximize_lambda(const Hypergraph& g, const OptimizerOptions& opts = {}) {
    const int n = g.vertex_count();
    if (n == 0) throw InvalidArgument("maximize_lambda needs at least one vertex");
    if (opts.restarts < 1) throw InvalidArgument("need at least one restart");

    OptResult best;
    bool have_best = false;
    bool all_converged = true;
    for (int restart = 0; restart < opts.restarts; ++restart) {
        std::vector<double> start(static_cast<std::size_t>(n));
        if (restart == 0) {
            std::fill(start.begin(), start.end(), 1.0 / n);
        } else {
            std::mt19937_64 rng(detail::splitmix64(opts.seed ^ (0xD1CEULL + restart)));
            std::exponential_distribution<double> expo(1.0);
            double sum = 0.0;
            for (double& x : start) { x = expo(rng); sum += x; }
            for (double& x : start) x /= sum;
        }
        auto outcome = detail::multiplicative_ascent(g, std::move(start), opts.max_iterations,
                                                     opts.tol);
        all_converged = all_converged && outcome.converged;
        if (!have_best || outcome.value > best.value) {
            best.value = outcome.value;
            best.point = std::move(outcome.point);
            have_best = true;
        }
    }
    best.restarts_used = opts.restarts;
    best.converged = all_converged;
    best.kkt_residual = detail::kkt_residual_at(g, std::span<const double>(best.point));
    for (Vertex v = 0; v < n; ++v)
        if (best.point[static_cast<std::size_t>(v)] > 1e-12) best.support.push_back(v);
    return best;
}

struct BalanceReport {
    Rational xi_value;              // lambda at the uniform point, exact
    Rational xi_critical_residual;  // first-order residual at uniform, exact
    double optimizer_value = 0.0;
    double excess_over_xi = 0.0;    // optimizer_value - xi (positive = beats uniform)
    bool consistent_with_balanced = false;
    OptResult opt;
};

/// Compare the optimizer against the uniform point of a certified system.
/// "Consistent with balanced" means no restart beat the uniform value by more
/// than tol; this is evidence, not a certificate.
inline BalanceReport check_balanced(const SteinerSystem& sys, int restarts = 50,
                                    double tol = 1e-9, std::uint64_t seed = 0) {
    if (!sys.certified) throw InvalidArgument("check_balanced requires a certified system");
    BalanceReport rep;
    const int n = sys.base.vertex_count();
    std::vector<Rational> xi(static_cast<std::size_t>(n), Rational(1, n));
    rep.xi_value = lambda_eval<Rational>(sys.base, std::span<const Rational>(xi));
    rep.xi_critical_residual = critical_residual<Rational>(sys.base, std::span<const Rational>(xi));
    OptimizerOptions opts;
    opts.restarts = restarts;
    opts.seed = seed;
    rep.opt = maximize_lambda(sys.base, opts);
    rep.optimizer_value = rep.opt.value;
    rep.excess_over_xi = rep.optimizer_value - to_double(rep.xi_value);
    rep.consistent_with_balanced = rep.excess_over_xi <= tol;
    return rep;
}

} // namespace turanlab
