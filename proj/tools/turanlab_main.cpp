#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include <turanlab/turanlab.hpp>

using namespace turanlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GlobalFlags {
    bool json = false;
    std::string cache_dir;
};

SteinerRegistry make_registry(const GlobalFlags& flags) {
    if (!flags.cache_dir.empty()) return SteinerRegistry(flags.cache_dir);
    return SteinerRegistry::from_environment();
}

void emit(const GlobalFlags& flags, Json payload, const std::string& human) {
    if (flags.json) {
        payload["schema"] = kSchemaTag;
        std::cout << payload.dump(2) << "\n";
    } else {
        std::cout << human;
    }
}

std::string slurp_stdin() {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

Json read_json_file(const std::string& path) {
    std::string text;
    if (path == "-") {
        text = slurp_stdin();
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

/// HGR input: a path or "-" for stdin.
Hypergraph load_graph(const std::string& path) {
    if (path == "-") return parse_hgr(slurp_stdin());
    return load_hgr(path);
}

/// --base and BlowupSpec "base" accept either an HGR path or a registry key
/// of the form steiner_m<m>_r<r>.
Hypergraph resolve_base(const std::string& ref, SteinerRegistry& registry) {
    static const std::regex key_form("steiner_m([0-9]+)_r([0-9]+)");
    std::smatch match;
    if (std::regex_match(ref, match, key_form) && !std::filesystem::exists(ref)) {
        const int m = std::stoi(match[1]);
        const int r = std::stoi(match[2]);
        return build_steiner(m, r, 500'000'000, &registry).base;
    }
    return load_hgr(ref);
}

BlowupSpec spec_from_json(const Json& j, SteinerRegistry& registry) {
    if (!j.contains("base") || !j.contains("assignment"))
        throw ParseError("blowup spec JSON needs base and assignment");
    Hypergraph base = j.at("base").is_string()
                          ? resolve_base(j.at("base").get<std::string>(), registry)
                          : graph_from_json(j.at("base"));
    return BlowupSpec(std::move(base), j.at("assignment").get<std::vector<int>>());
}

/// Weighted input: a .json weighted graph, or an .hgr file taken at the
/// uniform distribution.
WeightedHypergraph load_weighted(const std::string& path) {
    if (path == "-") {
        const std::string text = slurp_stdin();
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{')
            return weighted_from_json(Json::parse(text));
        return WeightedHypergraph::uniform(parse_hgr(text));
    }
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
        return weighted_from_json(read_json_file(path));
    return WeightedHypergraph::uniform(load_hgr(path));
}

std::vector<Rational> parse_rational_mu(const Json& mu_json) {
    std::vector<Rational> mu;
    for (const auto& entry : mu_json) {
        if (entry.is_string()) {
            const std::string s = entry.get<std::string>();
            const auto slash = s.find('/');
            if (slash == std::string::npos) {
                mu.emplace_back(BigInt(s));
            } else {
                mu.emplace_back(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
            }
        } else if (entry.is_number_integer()) {
            mu.emplace_back(entry.get<long long>());
        } else {
            throw ParseError("exact mode needs integer or \"p/q\" weights");
        }
    }
    return mu;
}

/// Exact-mode weighted input: .hgr at uniform, or weighted JSON whose mu
/// entries are integers or "p/q" strings.
std::pair<Hypergraph, std::vector<Rational>> load_weighted_exact(const std::string& path) {
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
        Json j = read_json_file(path);
        Hypergraph g = graph_from_json(j);
        if (!j.contains("mu")) throw ParseError("weighted graph JSON needs mu");
        auto mu = parse_rational_mu(j.at("mu"));
        return {std::move(g), std::move(mu)};
    }
    Hypergraph g = load_graph(path);
    const int n = g.vertex_count();
    return {std::move(g), std::vector<Rational>(static_cast<std::size_t>(n), Rational(1, n))};
}

int run_steiner_build(const GlobalFlags& flags, int m, int r, const std::string& out,
                      std::uint64_t budget) {
    auto registry = make_registry(flags);
    auto sys = build_steiner(m, r, budget, &registry);
    if (!out.empty()) save_hgr(sys.base, out);
    auto rep = verify_steiner(sys.base);
    Json j;
    j["command"] = "steiner build";
    j["m"] = m;
    j["r"] = r;
    j["blocks"] = sys.base.edge_count();
    j["certified"] = sys.certified;
    j["report"] = steiner_report_to_json(rep);
    j["hgr"] = to_hgr(sys.base);
    std::string human = "(" + std::to_string(m) + "," + std::to_string(r) + "," +
                        std::to_string(r - 1) + ") Steiner system: " +
                        std::to_string(sys.base.edge_count()) + " blocks, certified=" +
                        (sys.certified ? "yes" : "no") + "\n";
    if (!out.empty()) human += "written to " + out + "\n";
    emit(flags, j, human);
    return sys.certified ? kExitOk : kExitVerificationFailed;
}

int run_steiner_verify(const GlobalFlags& flags, const std::string& in) {
    auto g = load_graph(in);
    auto rep = verify_steiner(g);
    Json j;
    j["command"] = "steiner verify";
    j["report"] = steiner_report_to_json(rep);
    std::string human = "m=" + std::to_string(rep.m) + " r=" + std::to_string(rep.r) +
                        " blocks=" + std::to_string(g.edge_count()) + "\n";
    human += "  coverage all-once: ";
    human += (rep.coverage_histogram.size() == 1 && rep.coverage_histogram.count(1)) ? "yes"
                                                                                     : "no";
    human += "\n  edge count ok: ";
    human += rep.edge_count_ok ? "yes" : "no";
    human += "\n  degrees ok: ";
    human += rep.degrees_ok ? "yes" : "no";
    human += "\n  thin: ";
    human += rep.thin ? "yes" : "no";
    human += "\n  certified: ";
    human += rep.certified ? "yes" : "no";
    human += "\n";
    emit(flags, j, human);
    return rep.certified ? kExitOk : kExitVerificationFailed;
}

int run_lambda_max(const GlobalFlags& flags, const std::string& in, int restarts, double tol,
                   std::uint64_t seed) {
    auto w = load_weighted(in);
    OptimizerOptions opts;
    opts.restarts = restarts;
    opts.tol = tol;
    opts.seed = seed;
    auto res = maximize_lambda(w.graph, opts);
    Json j = opt_result_to_json(res);
    j["command"] = "lambda max";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", res.value);
    std::string human = std::string("lambda lower bound: ") + buf +
                        "  (kkt residual " + std::to_string(res.kkt_residual) + ", " +
                        std::to_string(res.restarts_used) + " restarts)\n";
    emit(flags, j, human);
    return kExitOk;
}

int run_lambda_eval(const GlobalFlags& flags, const std::string& in, bool exact) {
    Json j;
    j["command"] = "lambda eval";
    std::string human;
    if (exact) {
        auto [g, mu] = load_weighted_exact(in);
        const Rational value = lambda_eval<Rational>(g, mu);
        j["value"] = to_fraction_string(value);
        j["value_approx"] = to_double(value);
        human = "lambda = " + to_fraction_string(value) + "\n";
    } else {
        auto w = load_weighted(in);
        const double value = lambda_eval(w);
        j["value"] = value;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", value);
        human = std::string("lambda = ") + buf + "\n";
    }
    emit(flags, j, human);
    return kExitOk;
}

int run_lambda_critical(const GlobalFlags& flags, const std::string& in, bool exact) {
    Json j;
    j["command"] = "lambda critical";
    std::string human;
    if (exact) {
        auto [g, mu] = load_weighted_exact(in);
        const Rational value = critical_residual<Rational>(g, mu);
        j["critical_residual"] = to_fraction_string(value);
        j["critical_residual_approx"] = to_double(value);
        human = "critical residual = " + to_fraction_string(value) + "\n";
    } else {
        auto w = load_weighted(in);
        const double value = critical_residual<double>(w.graph, w.mu);
        j["critical_residual"] = value;
        human = "critical residual = " + std::to_string(value) + "\n";
    }
    emit(flags, j, human);
    return kExitOk;
}

int run_lambda_balanced(const GlobalFlags& flags, const std::string& in, int restarts,
                        double tol, std::uint64_t seed) {
    auto g = load_graph(in);
    auto rep_steiner = verify_steiner(g);
    if (!rep_steiner.certified)
        throw ValidationError("balancedness check needs a certified Steiner system");
    SteinerSystem sys{g, g.vertex_count(), g.uniformity(), true};
    auto rep = check_balanced(sys, restarts, tol, seed);
    Json j = balance_report_to_json(rep);
    j["command"] = "lambda balanced";
    std::string human = "xi value " + to_fraction_string(rep.xi_value) + " (= " +
                        std::to_string(to_double(rep.xi_value)) + ")\n" +
                        "optimizer best " + std::to_string(rep.optimizer_value) +
                        ", excess " + std::to_string(rep.excess_over_xi) + "\n" +
                        "critical residual at xi " +
                        to_fraction_string(rep.xi_critical_residual) + "\n" +
                        (rep.consistent_with_balanced ? "consistent-with-balanced\n"
                                                      : "optimizer beat the uniform point\n");
    emit(flags, j, human);
    return rep.consistent_with_balanced ? kExitOk : kExitVerificationFailed;
}

int run_symmetrize(const GlobalFlags& flags, const std::string& in, const std::string& out) {
    auto w = weighted_from_json(read_json_file(in));
    auto trace = symmetrize(w);
    Json j = trace_to_json(trace);
    j["command"] = "symmetrize";
    if (!out.empty()) {
        std::ofstream f(out);
        Json file_json = j;
        file_json["schema"] = kSchemaTag;
        f << file_json.dump(2) << "\n";
    }
    std::string human = std::to_string(trace.steps.size()) + " steps, final support of " +
                        std::to_string(trace.final_support.size()) + " vertices, lambda " +
                        std::to_string(lambda_eval(trace.final)) + ", covers pairs: " +
                        (trace.covers_pairs_on_support ? "yes" : "no") + "\n";
    emit(flags, j, human);
    return kExitOk;
}

int run_distance(const GlobalFlags& flags, const std::string& in, const std::string& base_ref,
                 const std::string& mode, std::uint64_t seed, std::uint64_t budget,
                 int restarts, bool check_transfer) {
    auto registry = make_registry(flags);
    auto g = load_graph(in);
    auto base = resolve_base(base_ref, registry);
    DistanceOptions opts;
    opts.mode = mode == "heuristic" ? DistanceMode::Heuristic : DistanceMode::Exact;
    opts.seed = seed;
    opts.budget = budget;
    opts.restarts = restarts;
    Json j;
    j["command"] = "distance";
    std::string human;
    if (check_transfer) {
        auto rep = check_distance_transfer(g, base, opts);
        j["transfer"] = transfer_report_to_json(rep);
        human = "distance " + std::to_string(rep.lhs) + " <= " + to_fraction_string(rep.rhs) +
                ": " + (rep.pass ? "pass" : "FAIL") + "\n";
        emit(flags, j, human);
        return rep.pass ? kExitOk : kExitVerificationFailed;
    }
    auto res = distance_to_blowups(g, base, opts);
    j["distance"] = distance_result_to_json(res);
    human = "distance " + std::to_string(res.value) + (res.exact ? " (exact)" : " (upper bound)") +
            "\n";
    emit(flags, j, human);
    return kExitOk;
}

int run_classify(const GlobalFlags& flags, const std::string& in, const std::string& spec_path,
                 int max_tuple) {
    auto registry = make_registry(flags);
    auto g = load_graph(in);
    auto spec = spec_from_json(read_json_file(spec_path), registry);
    auto cls = classify_edges(g, spec, max_tuple);
    Json j = classification_to_json(cls);
    j["command"] = "classify";
    j["epsilon_balance"] = epsilon_balance(spec);
    j["transversal_violations"] = transversal_violations(g, spec).size();
    std::string human = "good " + std::to_string(cls.good.size()) + ", bad " +
                        std::to_string(cls.bad.size()) + ", missing " +
                        std::to_string(cls.missing.size()) + ", eps-balance " +
                        std::to_string(epsilon_balance(spec)) + "\n";
    emit(flags, j, human);
    return kExitOk;
}

int run_search(const GlobalFlags& flags, int n, int r, const std::string& pattern, int t,
               std::uint64_t budget, bool parallel, bool deterministic, int threads) {
    PatternSpec spec;
    if (pattern == "sigma") spec.kind = ForbiddenPattern::SigmaMember;
    else if (pattern == "triangle") spec.kind = ForbiddenPattern::GeneralizedTriangle;
    else if (pattern == "clique") { spec.kind = ForbiddenPattern::Clique; spec.clique_order = t; }
    else if (pattern == "thin") spec.kind = ForbiddenPattern::ThinPair;
    else throw InvalidArgument("unknown pattern '" + pattern + "'");
    SearchOptions opts;
    opts.node_budget = budget;
    opts.parallel = parallel;
    opts.deterministic = deterministic;
    opts.threads = threads;
    auto res = max_free_edges(n, r, spec, opts);
    auto check = extremal_witness_check(res);
    if (!check.edge_count_ok || !check.freeness_ok)
        throw Error("witness failed its independent re-verification");
    Json j = search_result_to_json(res);
    j["command"] = "search";
    std::string human = "max " + pattern + "-free edges on n=" + std::to_string(n) +
                        ": " + std::to_string(res.max_edges) +
                        (res.certified ? " (certified)" : " (budget hit, lower bound)") + "\n";
    emit(flags, j, human);
    return res.certified ? kExitOk : kExitBudget;
}

int run_verify(const GlobalFlags& flags, const std::string& in, bool expect_thin,
               bool expect_sigma_free, bool expect_triangle_free, bool expect_covers,
               bool expect_steiner) {
    auto g = load_graph(in);
    auto thin_hit = find_thin_violation(g);
    auto sigma_hit = find_sigma_member(g);
    auto triangle_hit = find_generalized_triangle(g);
    const bool covers = g.covers_pairs();

    Json j;
    j["command"] = "verify";
    j["r"] = g.uniformity();
    j["n"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["thin"] = !thin_hit;
    if (thin_hit) j["thin_violation"] = pattern_hit_to_json(*thin_hit);
    j["sigma_free"] = !sigma_hit;
    if (sigma_hit) j["sigma_member"] = pattern_hit_to_json(*sigma_hit);
    j["triangle_free"] = !triangle_hit;
    if (triangle_hit) j["generalized_triangle"] = pattern_hit_to_json(*triangle_hit);
    j["covers_pairs"] = covers;

    bool ok = true;
    if (expect_thin && thin_hit) ok = false;
    if (expect_sigma_free && sigma_hit) ok = false;
    if (expect_triangle_free && triangle_hit) ok = false;
    if (expect_covers && !covers) ok = false;
    if (expect_steiner) {
        auto rep = verify_steiner(g);
        j["steiner"] = steiner_report_to_json(rep);
        if (!rep.certified) ok = false;
    }
    j["ok"] = ok;

    std::string human = "r=" + std::to_string(g.uniformity()) + " n=" +
                        std::to_string(g.vertex_count()) + " edges=" +
                        std::to_string(g.edge_count()) + "\n";
    human += "  thin: " + std::string(thin_hit ? "no" : "yes") + "\n";
    human += "  sigma-free: " + std::string(sigma_hit ? "no" : "yes") + "\n";
    human += "  triangle-free: " + std::string(triangle_hit ? "no" : "yes") + "\n";
    human += "  covers pairs: " + std::string(covers ? "yes" : "no") + "\n";
    human += ok ? "OK\n" : "FAILED expectations\n";
    emit(flags, j, human);
    return ok ? kExitOk : kExitVerificationFailed;
}

int run_constants(const GlobalFlags& flags, int m, int r) {
    auto [e, d] = steiner_constants(m, r);
    Json j;
    j["command"] = "constants";
    j["m"] = m;
    j["r"] = r;
    j["e"] = to_fraction_string(e);
    j["e_approx"] = to_double(e);
    j["d"] = to_fraction_string(d);
    j["d_approx"] = to_double(d);
    std::string human = "e(" + std::to_string(m) + "," + std::to_string(r) + ") = " +
                        to_fraction_string(e) + "\n" + "d(" + std::to_string(m) + "," +
                        std::to_string(r) + ") = " + to_fraction_string(d) + "\n";
    emit(flags, j, human);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergraph Lagrangians, Steiner systems and Turan search at desk scale"};
    app.require_subcommand(1);

    GlobalFlags flags;

    // steiner
    auto* steiner = app.add_subcommand("steiner", "build or verify Steiner systems");
    steiner->require_subcommand(1);
    auto* sbuild = steiner->add_subcommand("build", "construct an (m,r,r-1) design");
    int sb_m = 7, sb_r = 3;
    std::string sb_out;
    std::uint64_t sb_budget = 500'000'000;
    sbuild->add_option("-m", sb_m, "vertex count")->required();
    sbuild->add_option("-r", sb_r, "uniformity")->required();
    sbuild->add_option("-o,--output", sb_out, "write the design as HGR");
    sbuild->add_option("--budget", sb_budget, "exact cover node budget");
    sbuild->add_flag("--json", flags.json, "machine-readable output");
    sbuild->add_option("--cache-dir", flags.cache_dir, "design cache directory");
    auto* sverify = steiner->add_subcommand("verify", "verify a design file");
    std::string sv_in;
    sverify->add_option("-i,--input", sv_in, "HGR file")->required();
    sverify->add_flag("--json", flags.json, "machine-readable output");

    // lambda
    auto* lambda = app.add_subcommand("lambda", "weighted densities and Lagrangians");
    lambda->require_subcommand(1);
    auto* lmax = lambda->add_subcommand("max", "maximize over the simplex");
    std::string lm_in;
    int lm_restarts = 50;
    double lm_tol = 1e-10;
    std::uint64_t lm_seed = 0;
    lmax->add_option("-i,--input", lm_in, "HGR or weighted JSON")->required();
    lmax->add_option("--restarts", lm_restarts, "optimizer restarts");
    lmax->add_option("--tol", lm_tol, "convergence tolerance");
    lmax->add_option("--seed", lm_seed, "random seed");
    lmax->add_flag("--json", flags.json, "machine-readable output");
    auto* leval = lambda->add_subcommand("eval", "evaluate the density");
    std::string le_in;
    bool le_exact = false;
    leval->add_option("-i,--input", le_in, "HGR (uniform weights) or weighted JSON")->required();
    leval->add_flag("--exact", le_exact, "exact rational arithmetic");
    leval->add_flag("--json", flags.json, "machine-readable output");
    auto* lcrit = lambda->add_subcommand("critical", "first-order residual");
    std::string lc_in;
    bool lc_exact = false;
    lcrit->add_option("-i,--input", lc_in, "HGR (uniform weights) or weighted JSON")->required();
    lcrit->add_flag("--exact", lc_exact, "exact rational arithmetic");
    lcrit->add_flag("--json", flags.json, "machine-readable output");
    auto* lbal = lambda->add_subcommand("balanced", "compare optimizer against uniform");
    std::string lb_in;
    int lb_restarts = 50;
    double lb_tol = 1e-9;
    std::uint64_t lb_seed = 0;
    lbal->add_option("-i,--input", lb_in, "HGR file of a certified design")->required();
    lbal->add_option("--restarts", lb_restarts, "optimizer restarts");
    lbal->add_option("--tol", lb_tol, "allowed excess over the uniform value");
    lbal->add_option("--seed", lb_seed, "random seed");
    lbal->add_flag("--json", flags.json, "machine-readable output");

    // symmetrize
    auto* symm = app.add_subcommand("symmetrize", "weight-shifting symmetrization");
    std::string sy_in, sy_out;
    symm->add_option("-i,--input", sy_in, "weighted graph JSON")->required();
    symm->add_option("-o,--output", sy_out, "write the trace JSON");
    symm->add_flag("--json", flags.json, "machine-readable output");

    // distance
    auto* dist = app.add_subcommand("distance", "edit distance to a blowup family");
    std::string d_in, d_base, d_mode = "exact";
    std::uint64_t d_seed = 0, d_budget = 100'000'000;
    int d_restarts = 20;
    bool d_transfer = false;
    dist->add_option("-i,--input", d_in, "HGR file")->required();
    dist->add_option("--base", d_base, "HGR path or steiner_m<m>_r<r> registry key")->required();
    dist->add_option("--mode", d_mode, "exact|heuristic")
        ->check(CLI::IsMember({"exact", "heuristic"}));
    dist->add_option("--seed", d_seed, "random seed");
    dist->add_option("--budget", d_budget, "exact-mode assignment budget");
    dist->add_option("--restarts", d_restarts, "heuristic restarts");
    dist->add_flag("--check-transfer", d_transfer, "verify the distance transfer inequality");
    dist->add_flag("--json", flags.json, "machine-readable output");
    dist->add_option("--cache-dir", flags.cache_dir, "design cache directory");

    // classify
    auto* cls = app.add_subcommand("classify", "good/bad/missing edges against a blowup");
    std::string c_in, c_spec;
    int c_max_tuple = 2;
    cls->add_option("-i,--input", c_in, "HGR file")->required();
    cls->add_option("--spec", c_spec, "blowup spec JSON")->required();
    cls->add_option("--max-tuple", c_max_tuple, "deepest tuple size for a/b counts");
    cls->add_flag("--json", flags.json, "machine-readable output");
    cls->add_option("--cache-dir", flags.cache_dir, "design cache directory");

    // search
    auto* search = app.add_subcommand("search", "exact Turan numbers by branch and bound");
    int se_n = 5, se_r = 3, se_t = 3, se_threads = 0;
    std::string se_pattern = "sigma";
    std::uint64_t se_budget = 1'000'000'000;
    bool se_parallel = false, se_deterministic = false;
    search->add_option("--n", se_n, "vertex count")->required();
    search->add_option("--r", se_r, "uniformity")->required();
    search->add_option("--pattern", se_pattern, "sigma|triangle|clique|thin")
        ->check(CLI::IsMember({"sigma", "triangle", "clique", "thin"}));
    search->add_option("--t", se_t, "clique order for --pattern clique");
    search->add_option("--budget", se_budget, "search node budget");
    search->add_flag("--parallel", se_parallel, "split top-level branches across threads");
    search->add_flag("--deterministic", se_deterministic, "force the sequential schedule");
    search->add_option("--threads", se_threads, "worker threads (0 = hardware)");
    search->add_flag("--json", flags.json, "machine-readable output");

    // verify
    auto* verify = app.add_subcommand("verify", "pattern and design checks on a graph");
    std::string v_in;
    bool v_thin = false, v_sigma = false, v_triangle = false, v_covers = false,
         v_steiner = false;
    verify->add_option("-i,--input", v_in, "HGR file")->required();
    verify->add_flag("--expect-thin", v_thin, "fail if two edges share r-1 vertices");
    verify->add_flag("--expect-sigma-free", v_sigma, "fail on a sigma-family member");
    verify->add_flag("--expect-triangle-free", v_triangle, "fail on a generalized triangle");
    verify->add_flag("--expect-covers-pairs", v_covers, "fail unless every pair is covered");
    verify->add_flag("--expect-steiner", v_steiner, "fail unless a certified design");
    verify->add_flag("--json", flags.json, "machine-readable output");

    // constants
    auto* consts = app.add_subcommand("constants", "exact e(m,r) and d(m,r)");
    int k_m = 11, k_r = 5;
    consts->add_option("-m", k_m, "vertex count")->required();
    consts->add_option("-r", k_r, "uniformity")->required();
    consts->add_flag("--json", flags.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sbuild->parsed()) return run_steiner_build(flags, sb_m, sb_r, sb_out, sb_budget);
        if (sverify->parsed()) return run_steiner_verify(flags, sv_in);
        if (lmax->parsed()) return run_lambda_max(flags, lm_in, lm_restarts, lm_tol, lm_seed);
        if (leval->parsed()) return run_lambda_eval(flags, le_in, le_exact);
        if (lcrit->parsed()) return run_lambda_critical(flags, lc_in, lc_exact);
        if (lbal->parsed()) return run_lambda_balanced(flags, lb_in, lb_restarts, lb_tol, lb_seed);
        if (symm->parsed()) return run_symmetrize(flags, sy_in, sy_out);
        if (dist->parsed())
            return run_distance(flags, d_in, d_base, d_mode, d_seed, d_budget, d_restarts,
                                d_transfer);
        if (cls->parsed()) return run_classify(flags, c_in, c_spec, c_max_tuple);
        if (search->parsed())
            return run_search(flags, se_n, se_r, se_pattern, se_t, se_budget, se_parallel,
                              se_deterministic, se_threads);
        if (verify->parsed())
            return run_verify(flags, v_in, v_thin, v_sigma, v_triangle, v_covers, v_steiner);
        if (consts->parsed()) return run_constants(flags, k_m, k_r);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const MemoryBudget& e) {
        std::cerr << "memory budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const NoSuchDesign& e) {
        std::cerr << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DimensionMismatch& e) {
        std::cerr << "dimension mismatch: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidAssignment& e) {
        std::cerr << "invalid assignment: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnsupportedBase& e) {
        std::cerr << "unsupported base: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InconsistentWeights& e) {
        std::cerr << "inconsistent weights: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidPair& e) {
        std::cerr << "invalid pair: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
}
