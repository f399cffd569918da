#pragma once

#include <json.hpp>

#include "turanlab/blowup.hpp"
#include "turanlab/extremal.hpp"
#include "turanlab/hypergraph.hpp"
#include "turanlab/lagrangian.hpp"
#include "turanlab/metric.hpp"
#include "turanlab/steiner.hpp"
#include "turanlab/symmetrize.hpp"

namespace turanlab {

using Json = nlohmann::json;

inline constexpr const char* kSchemaTag = "turanlab/1";

inline Json graph_to_json(const Hypergraph& g) {
    Json j;
    j["r"] = g.uniformity();
    j["n"] = g.vertex_count();
    j["edges"] = g.edges();
    return j;
}

inline Hypergraph graph_from_json(const Json& j) {
    if (!j.contains("r") || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON needs r, n and edges");
    std::vector<Edge> edges = j.at("edges").get<std::vector<Edge>>();
    return Hypergraph(j.at("r").get<int>(), j.at("n").get<int>(), std::move(edges));
}

/// {"r":int,"n":int,"edges":[[int,...]],"mu":[num,...]}
inline Json weighted_to_json(const WeightedHypergraph& w) {
    Json j = graph_to_json(w.graph);
    j["mu"] = w.mu;
    return j;
}

inline WeightedHypergraph weighted_from_json(const Json& j) {
    Hypergraph g = graph_from_json(j);
    if (!j.contains("mu")) throw ParseError("weighted graph JSON needs mu");
    std::vector<double> mu = j.at("mu").get<std::vector<double>>();
    return WeightedHypergraph(std::move(g), std::move(mu));
}

inline Json opt_result_to_json(const OptResult& res) {
    Json j;
    j["value"] = res.value;
    j["point"] = res.point;
    j["kkt_residual"] = res.kkt_residual;
    j["restarts_used"] = res.restarts_used;
    j["support"] = res.support;
    j["converged"] = res.converged;
    return j;
}

inline Json steiner_report_to_json(const SteinerReport& rep) {
    Json j;
    j["m"] = rep.m;
    j["r"] = rep.r;
    Json hist = Json::object();
    for (const auto& [count, subsets] : rep.coverage_histogram)
        hist[std::to_string(count)] = subsets;
    j["coverage_histogram"] = hist;
    j["expected_edges"] = rep.expected_edges.str();
    j["edge_count_ok"] = rep.edge_count_ok;
    j["expected_degree"] = rep.expected_degree.str();
    j["degrees_ok"] = rep.degrees_ok;
    j["thin"] = rep.thin;
    j["certified"] = rep.certified;
    return j;
}

inline Json blowup_spec_to_json(const BlowupSpec& spec) {
    Json j;
    j["assignment"] = spec.assignment;
    j["part_sizes"] = spec.part_sizes();
    return j;
}

inline Json search_result_to_json(const SearchResult& res) {
    Json j;
    j["n"] = res.n;
    j["r"] = res.r;
    j["pattern"] = forbidden_pattern_name(res.pattern.kind);
    if (res.pattern.kind == ForbiddenPattern::Clique) j["t"] = res.pattern.clique_order;
    j["max_edges"] = res.max_edges;
    j["witness_hgr"] = to_hgr(res.witness);
    j["nodes_explored"] = res.nodes_explored;
    j["certified"] = res.certified;
    return j;
}

inline Json pattern_hit_to_json(const PatternHit& hit) {
    Json j;
    j["kind"] = pattern_kind_name(hit.kind);
    j["witness_edges"] = hit.witness_edges;
    j["witness_vertices"] = hit.witness_vertices;
    return j;
}

inline Json distance_result_to_json(const DistanceResult& res) {
    Json j;
    j["value"] = res.value;
    j["exact"] = res.exact;
    j["nodes"] = res.nodes;
    if (res.witness) j["witness"] = blowup_spec_to_json(*res.witness);
    return j;
}

inline Json transfer_report_to_json(const TransferReport& rep) {
    Json j;
    j["lhs"] = rep.lhs;
    j["d_prime"] = to_fraction_string(rep.d_prime);
    j["rhs"] = to_fraction_string(rep.rhs);
    j["rhs_approx"] = to_double(rep.rhs);
    j["pass"] = rep.pass;
    if (rep.witness) j["witness"] = blowup_spec_to_json(*rep.witness);
    return j;
}

inline Json trace_to_json(const SymmetrizationTrace& trace) {
    Json j;
    Json steps = Json::array();
    for (const auto& s : trace.steps) {
        Json step;
        step["v1"] = s.v1;
        step["v2"] = s.v2;
        step["direction"] = s.direction;
        step["lambda_before"] = s.lambda_before;
        step["lambda_after"] = s.lambda_after;
        steps.push_back(step);
    }
    j["steps"] = steps;
    j["final"] = weighted_to_json(trace.final);
    j["final_support"] = trace.final_support;
    j["covers_pairs_on_support"] = trace.covers_pairs_on_support;
    return j;
}

inline Json classification_to_json(const EdgeClassification& cls) {
    Json j;
    j["good"] = cls.good.size();
    j["bad"] = cls.bad.size();
    j["missing"] = cls.missing.size();
    auto counts_to_json = [](const std::map<Edge, long long>& counts) {
        Json out = Json::array();
        for (const auto& [tuple, count] : counts) {
            Json entry;
            entry["tuple"] = tuple;
            entry["count"] = count;
            out.push_back(entry);
        }
        return out;
    };
    j["a_counts"] = counts_to_json(cls.a_counts);
    j["b_counts"] = counts_to_json(cls.b_counts);
    return j;
}

inline Json balance_report_to_json(const BalanceReport& rep) {
    Json j;
    j["xi_value"] = to_fraction_string(rep.xi_value);
    j["xi_value_approx"] = to_double(rep.xi_value);
    j["xi_critical_residual"] = to_fraction_string(rep.xi_critical_residual);
    j["optimizer_value"] = rep.optimizer_value;
    j["excess_over_xi"] = rep.excess_over_xi;
    j["consistent_with_balanced"] = rep.consistent_with_balanced;
    j["optimizer"] = opt_result_to_json(rep.opt);
    return j;
}

} // namespace turanlab
