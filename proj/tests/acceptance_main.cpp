// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Usage: turanlab_acceptance <path-to-cli-binary>

#include <chrono>
#include <sys/wait.h>
#include <unistd.h>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <turanlab/turanlab.hpp>

#include "support/properties.hpp"

using namespace turanlab;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail
              << std::endl;
    if (!pass) ++g_failures;
}

void info(const std::string& detail) { std::cout << "INFO " << detail << std::endl; }

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

struct CommandOutput {
    int exit_code = -1;
    std::string stdout_bytes;
};

CommandOutput run_command(const std::string& command) {
    CommandOutput out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return out;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.stdout_bytes.append(buffer, got);
    const int status = pclose(pipe);
    out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

// ---------------------------------------------------------------- criterion 1

struct BuiltSystems {
    std::optional<SteinerSystem> s7, s11, s12;
};

BuiltSystems criterion1_steiner() {
    BuiltSystems built;

    auto t0 = std::chrono::steady_clock::now();
    auto s7 = build_steiner(7, 3);
    const double t7 = seconds_since(t0);
    const bool ok7 = s7.certified && verify_steiner(s7.base).certified && t7 < 1.0;
    report(1, ok7, "(7,3,2) certified with " + std::to_string(s7.base.edge_count()) +
                       " blocks in " + fmt_seconds(t7) + " (< 1s)");
    built.s7 = std::move(s7);

    t0 = std::chrono::steady_clock::now();
    auto s11 = build_steiner(11, 5);
    const double t11 = seconds_since(t0);
    bool degrees11 = true;
    for (Vertex v = 0; v < 11; ++v) degrees11 = degrees11 && s11.base.degree(v) == 30;
    const bool ok11 = s11.certified && s11.base.edge_count() == 66 && degrees11 &&
                      verify_steiner(s11.base).certified && t11 < 60.0;
    report(1, ok11, "(11,5,4) certified, 66 blocks, all degrees 30, in " + fmt_seconds(t11) +
                        " (< 60s)");
    built.s11 = std::move(s11);

    t0 = std::chrono::steady_clock::now();
    auto s12 = build_steiner(12, 6);
    const double t12 = seconds_since(t0);
    bool degrees12 = true;
    for (Vertex v = 0; v < 12; ++v) degrees12 = degrees12 && s12.base.degree(v) == 66;
    const bool ok12 = s12.certified && s12.base.edge_count() == 132 && degrees12 &&
                      verify_steiner(s12.base).certified && t12 < 600.0;
    report(1, ok12, "(12,6,5) certified, 132 blocks, all degrees 66, in " + fmt_seconds(t12) +
                        " (< 10min, direct exact cover)");
    const bool extension_ok = [&] {
        auto alt = extend_steiner_11_5(*built.s11);
        return alt.certified && verify_steiner(alt.base).certified;
    }();
    info(std::string("one-point extension path also certified: ") +
         (extension_ok ? "yes" : "NO"));
    built.s12 = std::move(s12);
    return built;
}

// ---------------------------------------------------------------- criterion 2

void criterion2_exact_identities(const BuiltSystems& built) {
    std::vector<Rational> xi11(11, Rational(1, 11));
    std::vector<Rational> xi12(12, Rational(1, 12));
    const Rational l5 = lambda_eval<Rational>(built.s11->base, xi11);
    const Rational l6 = lambda_eval<Rational>(built.s12->base, xi12);
    report(2, l5 == Rational(66, 161051),
           "lambda(S5, xi) = " + to_fraction_string(l5) + " == 66/161051 exactly");
    report(2, l6 == Rational(132, 2985984),
           "lambda(S6, xi) = " + to_fraction_string(l6) + " == 132/2985984 exactly");
    const Rational r5 = critical_residual<Rational>(built.s11->base, xi11);
    const Rational r6 = critical_residual<Rational>(built.s12->base, xi12);
    report(2, r5 == 0 && r6 == 0,
           "critical residual at xi is exactly 0 for both (" + to_fraction_string(r5) + ", " +
               to_fraction_string(r6) + ")");
}

// ---------------------------------------------------------------- criterion 3

void criterion3_balancedness(const BuiltSystems& built) {
    const auto t0 = std::chrono::steady_clock::now();
    bool all_ok = true;
    std::string detail;
    for (const auto* sys : {&*built.s11, &*built.s12}) {
        auto rep = check_balanced(*sys, 50, 1e-9, 0);
        const double xi = to_double(rep.xi_value);
        const bool never_exceeds = rep.optimizer_value <= xi + 1e-9;
        const bool attains = rep.optimizer_value >= xi - 1e-7;
        all_ok = all_ok && never_exceeds && attains;
        detail += "S" + std::to_string(sys->r) + " excess " +
                  std::to_string(rep.excess_over_xi) + "; ";
    }
    Hypergraph k4(2, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    OptimizerOptions opts;
    opts.restarts = 50;
    auto k4_res = maximize_lambda(k4, opts);
    const bool k4_ok = std::abs(k4_res.value - 0.375) <= 1e-8;
    const double elapsed = seconds_since(t0);
    report(3, all_ok && k4_ok && elapsed < 60.0,
           "50-restart optimizer: S5/S6 within [xi-1e-7, xi+1e-9] (" + detail +
               "), lambda(K4) = " + std::to_string(k4_res.value) + " = 0.375 +- 1e-8, total " +
               fmt_seconds(elapsed) + " (< 60s)");
}

// ---------------------------------------------------------------- criterion 4

std::vector<long long> criterion4_turan_numbers() {
    std::vector<long long> sigma_values;
    for (int n = 4; n <= 6; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        auto res = max_free_edges(n, 3, {ForbiddenPattern::SigmaMember});
        const double dt = seconds_since(t0);
        auto check = extremal_witness_check(res);
        const long long expected = bollobas_formula(n);
        const bool ok = res.certified && res.max_edges == expected && check.edge_count_ok &&
                        check.freeness_ok && dt < 300.0;
        report(4, ok, "ex(" + std::to_string(n) + ", Sigma_3) = " +
                          std::to_string(res.max_edges) + " == " + std::to_string(expected) +
                          ", certified in " + fmt_seconds(dt) + " (< 5min)");
        sigma_values.push_back(res.max_edges);
    }
    for (int n = 4; n <= 7; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        auto res = max_free_edges(n, 2, {ForbiddenPattern::Clique, 3});
        const double dt = seconds_since(t0);
        const long long expected = static_cast<long long>(n) * n / 4;
        const bool ok = res.certified && res.max_edges == expected && dt < 60.0;
        report(4, ok, "ex(" + std::to_string(n) + ", K_3) = " + std::to_string(res.max_edges) +
                          " == " + std::to_string(expected) + ", certified in " +
                          fmt_seconds(dt) + " (< 1min)");
    }
    // stretch goal, reported but not required
    {
        const auto t0 = std::chrono::steady_clock::now();
        SearchOptions opts;
        opts.node_budget = 1'000'000'000;
        auto res = max_free_edges(7, 3, {ForbiddenPattern::SigmaMember}, opts);
        info("stretch: ex(7, Sigma_3) = " + std::to_string(res.max_edges) +
             (res.certified ? " certified" : " (budget hit)") + " in " +
             fmt_seconds(seconds_since(t0)) + ", target 12");
        sigma_values.push_back(res.max_edges);
    }
    return sigma_values;
}

// ---------------------------------------------------------------- criterion 5

void criterion5_blowup_freeness(const BuiltSystems& built,
                                const std::vector<long long>& sigma_values) {
    std::mt19937_64 rng(0x5EED);
    bool all_free = true;
    int scanned = 0;

    auto scan_spec = [&](const Hypergraph& base, const std::vector<int>& assignment) {
        auto g = blow_up(BlowupSpec(base, assignment));
        ++scanned;
        if (brute::has_sigma_member(g)) all_free = false;
    };

    // canonical blowups of S5 up to n = 13
    {
        const auto& s5 = built.s11->base;
        std::vector<int> identity(11);
        std::iota(identity.begin(), identity.end(), 0);
        scan_spec(s5, identity);
        for (int doubled = 0; doubled < 11; ++doubled) {
            auto assign = identity;
            assign.push_back(doubled); // n = 12
            scan_spec(s5, assign);
        }
        for (int trial = 0; trial < 30; ++trial) { // n = 13 samples
            auto assign = identity;
            assign.push_back(static_cast<int>(rng() % 11));
            assign.push_back(static_cast<int>(rng() % 11));
            scan_spec(s5, assign);
        }
        for (int trial = 0; trial < 20; ++trial) { // fully random up to 13
            std::vector<int> assign(11 + rng() % 3);
            for (int& a : assign) a = static_cast<int>(rng() % 11);
            scan_spec(s5, assign);
        }
    }
    // Fano blowups up to n = 14, including the uniform doubling
    {
        const Hypergraph fano(3, 7,
                              {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6},
                               {2, 4, 5}});
        scan_spec(fano, std::vector<int>(14, 0)); // degenerate: everything in one part
        auto doubled = BlowupSpec::from_part_sizes(fano, std::vector<int>(7, 2));
        scan_spec(fano, doubled.assignment);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<int> assign(7 + rng() % 8); // n in [7, 14]
            for (int& a : assign) a = static_cast<int>(rng() % 7);
            scan_spec(fano, assign);
        }
    }
    report(5, all_free, "exhaustive triple scans: " + std::to_string(scanned) +
                            " blowups of S5 (n <= 13) and Fano (n <= 14) are Sigma-free");

    bool dominance = true;
    std::string detail;
    for (int n = 4; n <= 6; ++n) {
        auto t = max_free_edges(n, 3, {ForbiddenPattern::GeneralizedTriangle});
        const long long sigma = sigma_values[static_cast<std::size_t>(n - 4)];
        dominance = dominance && t.certified && t.max_edges >= sigma;
        detail += "n=" + std::to_string(n) + ": " + std::to_string(t.max_edges) +
                  " >= " + std::to_string(sigma) + "; ";
    }
    report(5, dominance, "ex(n, T_3) >= ex(n, Sigma_3) on all searched n (" + detail + ")");
}

// ---------------------------------------------------------------- criterion 6

void criterion6_property_suite() {
    const auto t0 = std::chrono::steady_clock::now();
    int total = 0, failures = 0;
    std::string first;
    for (const auto& entry : properties::suite()) {
        auto outcome = entry.run(0xC0FFEE, entry.cases);
        total += outcome.cases;
        failures += outcome.failures;
        if (!outcome.ok() && first.empty())
            first = std::string(entry.name) + ": " + outcome.first_failure;
    }
    const double elapsed = seconds_since(t0);
    report(6, failures == 0 && total == 1000 && elapsed < 300.0,
           std::to_string(total) + " randomized cases, " + std::to_string(failures) +
               " failures, in " + fmt_seconds(elapsed) + " (< 5min)" +
               (first.empty() ? "" : " [" + first + "]"));
}

// ---------------------------------------------------------------- criterion 7

void criterion7_determinism(const std::string& cli, const BuiltSystems& built) {
    const fs::path dir = fs::temp_directory_path() / ("turanlab-acceptance-" +
                                                      std::to_string(::getpid()));
    fs::create_directories(dir);
    const fs::path cache = dir / "cache";

    // fixture files
    const Hypergraph fano(3, 7,
                          {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6},
                           {2, 4, 5}});
    save_hgr(fano, dir / "fano.hgr");
    save_hgr(built.s11->base, dir / "s5.hgr");
    {
        auto edges = fano.edges();
        edges.pop_back();
        save_hgr(Hypergraph(3, 7, std::move(edges)), dir / "fano_minus.hgr");
    }
    save_hgr(Hypergraph(2, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}), dir / "c5.hgr");
    save_hgr(Hypergraph(2, 2, {{0, 1}}), dir / "k2.hgr");
    {
        std::ofstream p3(dir / "p3.json");
        p3 << R"({"r":2,"n":3,"edges":[[0,1],[1,2]],)"
           << R"("mu":[0.3333333333333333,0.3333333333333333,0.3333333333333334]})";
    }
    {
        std::ofstream spec(dir / "idspec.json");
        spec << R"({"base":")" << (dir / "fano.hgr").string()
             << R"(","assignment":[0,1,2,3,4,5,6]})";
    }

    const std::string fano_path = (dir / "fano.hgr").string();
    const std::string s5_path = (dir / "s5.hgr").string();
    std::vector<std::string> matrix = {
        "constants -m 11 -r 5 --json",
        "constants -m 12 -r 6 --json",
        "steiner build -m 7 -r 3 --json --cache-dir " + (cache / "a").string(),
        "steiner build -m 11 -r 5 --json --cache-dir " + (cache / "b").string(),
        "steiner verify -i " + fano_path + " --json",
        "lambda max -i " + s5_path + " --restarts 50 --seed 0 --json",
        "lambda max -i " + s5_path + " --restarts 50 --seed 7 --json",
        "lambda eval -i " + s5_path + " --exact --json",
        "lambda critical -i " + s5_path + " --exact --json",
        "lambda balanced -i " + s5_path + " --restarts 10 --seed 0 --json",
        "search --n 5 --r 3 --pattern sigma --json",
        "search --n 6 --r 3 --pattern sigma --json",
        "search --n 6 --r 2 --pattern clique --t 3 --json",
        "search --n 6 --r 3 --pattern sigma --parallel --threads 2 --json",
        "search --n 6 --r 3 --pattern sigma --deterministic --json",
        "distance -i " + (dir / "c5.hgr").string() + " --base " + (dir / "k2.hgr").string() +
            " --seed 0 --json",
        "distance -i " + (dir / "c5.hgr").string() + " --base " + (dir / "k2.hgr").string() +
            " --mode heuristic --seed 0 --json",
        "distance -i " + (dir / "c5.hgr").string() + " --base " + (dir / "k2.hgr").string() +
            " --check-transfer --json",
        "distance -i " + (dir / "fano_minus.hgr").string() + " --base " + fano_path +
            " --seed 0 --json",
        "symmetrize -i " + (dir / "p3.json").string() + " --json",
        "classify -i " + fano_path + " --spec " + (dir / "idspec.json").string() + " --json",
        "verify -i " + fano_path + " --expect-thin --expect-sigma-free --json",
    };

    bool identical = true;
    std::string mismatch;
    std::vector<CommandOutput> first_run;
    for (const auto& args : matrix) first_run.push_back(run_command(cli + " " + args));
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        auto second = run_command(cli + " " + matrix[i]);
        if (second.stdout_bytes != first_run[i].stdout_bytes ||
            second.exit_code != first_run[i].exit_code) {
            identical = false;
            if (mismatch.empty()) mismatch = matrix[i];
        }
        if (first_run[i].exit_code != 0) {
            identical = false;
            if (mismatch.empty()) mismatch = matrix[i] + " (exit " +
                                             std::to_string(first_run[i].exit_code) + ")";
        }
    }
    report(7, identical, "two runs of the " + std::to_string(matrix.size()) +
                             "-command CLI matrix produce byte-identical JSON" +
                             (mismatch.empty() ? "" : " [first mismatch: " + mismatch + "]"));
    fs::remove_all(dir);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: turanlab_acceptance <path-to-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    try {
        auto built = criterion1_steiner();
        criterion2_exact_identities(built);
        criterion3_balancedness(built);
        auto sigma_values = criterion4_turan_numbers();
        criterion5_blowup_freeness(built, sigma_values);
        criterion6_property_suite();
        criterion7_determinism(cli, built);
    } catch (const std::exception& e) {
        std::cout << "FAIL (exception): " << e.what() << std::endl;
        return 1;
    }
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " +
                                                                std::to_string(g_failures))
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
