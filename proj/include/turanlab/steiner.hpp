#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "turanlab/exact_cover.hpp"
#include "turanlab/hypergraph.hpp"
#include "turanlab/patterns.hpp"
#include "turanlab/rational.hpp"

namespace turanlab {

/// An r-graph certified (or not) as an (m, r, r-1) Steiner system.
struct SteinerSystem {
    Hypergraph base;
    int m = 0;
    int r = 0;
    bool certified = false;
};

struct SteinerReport {
    int m = 0;
    int r = 0;
    /// coverage count -> number of (r-1)-subsets seen that many times; a
    /// design has the single entry {1: C(m,r-1)}
    std::map<std::size_t, std::size_t> coverage_histogram;
    BigInt expected_edges = 0;       // C(m,r-1)/r, as floor when not integral
    bool edge_count_ok = false;
    BigInt expected_degree = 0;      // C(m-1,r-2)/(r-1)
    bool degrees_ok = false;
    bool thin = false;               // independent cross-check via the detector
    bool certified = false;
};

/// The exact densities e(m,r) = C(m,r-1)/(r m^r) and
/// d(m,r) = C(m-1,r-2)/((r-1) m^(r-1)).
inline std::pair<Rational, Rational> steiner_constants(int m, int r) {
    if (r < 2 || m < r) throw InvalidArgument("steiner_constants requires m >= r >= 2");
    Rational e(binomial(m, r - 1), BigInt(r) * int_pow(m, r));
    Rational d(binomial(m - 1, r - 2), BigInt(r - 1) * int_pow(m, r - 1));
    return {e, d};
}

/// Check all defining identities of an (m, r, r-1) Steiner system exactly.
inline SteinerReport verify_steiner(const Hypergraph& g) {
    SteinerReport rep;
    rep.m = g.vertex_count();
    rep.r = g.uniformity();
    const int m = rep.m, r = rep.r;
    if (r < 2 || m < r) return rep;

    // per-(r-1)-subset coverage counts
    std::map<Edge, std::size_t> cover;
    for (const auto& sub : all_subsets(m, r - 1)) cover[sub] = 0;
    for (const auto& e : g.edges()) {
        for (int drop = 0; drop < r; ++drop) {
            Edge sub;
            sub.reserve(static_cast<std::size_t>(r - 1));
            for (int i = 0; i < r; ++i)
                if (i != drop) sub.push_back(e[static_cast<std::size_t>(i)]);
            ++cover[sub];
        }
    }
    bool all_once = true;
    for (const auto& [sub, c] : cover) {
        ++rep.coverage_histogram[c];
        if (c != 1) all_once = false;
    }

    const BigInt blocks_num = binomial(m, r - 1);
    rep.expected_edges = blocks_num / r;
    rep.edge_count_ok =
        blocks_num % r == 0 && BigInt(g.edge_count()) * r == blocks_num;

    const BigInt deg_num = binomial(m - 1, r - 2);
    rep.expected_degree = deg_num / (r - 1);
    rep.degrees_ok = deg_num % (r - 1) == 0;
    if (rep.degrees_ok) {
        for (Vertex v = 0; v < m; ++v) {
            if (BigInt(g.degree(v)) * (r - 1) != deg_num) { rep.degrees_ok = false; break; }
        }
    }

    rep.thin = !find_thin_violation(g).has_value();
    rep.certified = all_once && rep.edge_count_ok && rep.degrees_ok && rep.thin;
    return rep;
}

namespace detail {

/// Blocks-through-a-subset counts must all be integral:
/// C(m-i, r-1-i) divisible by (r-i) for i = 0..r-2.
inline bool steiner_divisibility_ok(int m, int r) {
    for (int i = 0; i <= r - 2; ++i)
        if (binomial(m - i, r - 1 - i) % (r - i) != 0) return false;
    return true;
}

} // namespace detail

/// On-disk cache of constructed designs, one HGR file per (m, r).
class SteinerRegistry {
public:
    explicit SteinerRegistry(std::filesystem::path dir) : dir_(std::move(dir)) {}

    /// Resolves the cache directory from TURANLAB_CACHE, defaulting to
    /// a per-user directory under the system temp path.
    static SteinerRegistry from_environment() {
        if (const char* env = std::getenv("TURANLAB_CACHE"))
            return SteinerRegistry(std::filesystem::path(env));
        return SteinerRegistry(std::filesystem::temp_directory_path() / "turanlab-cache");
    }

    static std::string file_name(int m, int r) {
        return "steiner_m" + std::to_string(m) + "_r" + std::to_string(r) + ".hgr";
    }

    std::optional<SteinerSystem> load(int m, int r) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memory_.find({m, r});
        if (it != memory_.end()) return it->second;
        const auto path = dir_ / file_name(m, r);
        if (!std::filesystem::exists(path)) return std::nullopt;
        Hypergraph g = load_hgr(path);
        auto rep = verify_steiner(g);
        if (!rep.certified) return std::nullopt; // stale or corrupted cache entry
        SteinerSystem sys{std::move(g), m, r, true};
        memory_.emplace(std::make_pair(m, r), sys);
        return sys;
    }

    void store(const SteinerSystem& sys) {
        std::lock_guard<std::mutex> lock(mutex_);
        std::filesystem::create_directories(dir_);
        save_hgr(sys.base, dir_ / file_name(sys.m, sys.r));
        memory_.insert_or_assign(std::make_pair(sys.m, sys.r), sys);
    }

    const std::filesystem::path& directory() const { return dir_; }

private:
    std::filesystem::path dir_;
    std::mutex mutex_;
    std::map<std::pair<int, int>, SteinerSystem> memory_;
};

/// One-point extension of an (11,5,4) system: append vertex 11 to every block
/// and add the 11-point complement of every block. The result is an
/// (12,6,5) system because hexad complements are hexads in the unique
/// extension; verify_steiner certifies the outcome either way.
inline SteinerSystem extend_steiner_11_5(const SteinerSystem& s11) {
    if (s11.m != 11 || s11.r != 5 || !s11.certified)
        throw InvalidArgument("extension requires a certified (11,5,4) system");
    std::vector<Edge> blocks;
    blocks.reserve(132);
    for (const auto& b : s11.base.edges()) {
        Edge with_new = b;
        with_new.push_back(11);
        blocks.push_back(std::move(with_new));
        Edge complement;
        for (Vertex v = 0; v < 11; ++v)
            if (!std::binary_search(b.begin(), b.end(), v)) complement.push_back(v);
        blocks.push_back(std::move(complement));
    }
    Hypergraph g(6, 12, std::move(blocks));
    const bool ok = verify_steiner(g).certified;
    if (!ok) throw Error("one-point extension failed verification");
    return SteinerSystem{std::move(g), 12, 6, true};
}

/// Construct an (m, r, r-1) Steiner system by exact cover over the
/// (r-1)-subsets, with the lexicographically first block forced. Throws
/// NoSuchDesign after an exhaustive search (or a divisibility failure) and
/// BudgetExceeded when the node budget runs out first. For (12,6,5) a budget
/// exhaustion falls back to one-point extension of the (11,5,4) system.
inline SteinerSystem build_steiner(int m, int r, std::uint64_t node_budget = 500'000'000,
                                   SteinerRegistry* registry = nullptr) {
    if (r < 2 || m < r) throw InvalidArgument("build_steiner requires m >= r >= 2");
    if (registry) {
        if (auto cached = registry->load(m, r)) return *cached;
    }
    if (!detail::steiner_divisibility_ok(m, r))
        throw NoSuchDesign("no (" + std::to_string(m) + "," + std::to_string(r) + "," +
                           std::to_string(r - 1) + ") design: divisibility conditions fail");

    const auto items = all_subsets(m, r - 1);
    std::map<Edge, int> item_id;
    for (std::size_t i = 0; i < items.size(); ++i) item_id[items[i]] = static_cast<int>(i);

    const auto candidate_blocks = all_subsets(m, r);
    ExactCoverInstance inst;
    inst.num_items = static_cast<int>(items.size());
    inst.rows.reserve(candidate_blocks.size());
    for (const auto& block : candidate_blocks) {
        std::vector<int> row;
        row.reserve(static_cast<std::size_t>(r));
        for (int drop = 0; drop < r; ++drop) {
            Edge sub;
            sub.reserve(static_cast<std::size_t>(r - 1));
            for (int i = 0; i < r; ++i)
                if (i != drop) sub.push_back(block[static_cast<std::size_t>(i)]);
            row.push_back(item_id.at(sub));
        }
        std::sort(row.begin(), row.end());
        inst.rows.push_back(std::move(row));
    }

    // any design can be relabeled to contain the block {0,..,r-1}, which is
    // the lex-first candidate, i.e. row 0
    CoverResult res = solve_exact_cover(inst, node_budget, {0});
    if (res.status == CoverStatus::BudgetExceeded) {
        if (m == 12 && r == 6) {
            SteinerSystem s11 = build_steiner(11, 5, node_budget, registry);
            SteinerSystem s12 = extend_steiner_11_5(s11);
            if (registry) registry->store(s12);
            return s12;
        }
        throw BudgetExceeded("steiner search budget exceeded after " +
                             std::to_string(res.nodes) + " nodes");
    }
    if (res.status == CoverStatus::Exhausted)
        throw NoSuchDesign("exhaustive search: no (" + std::to_string(m) + "," +
                           std::to_string(r) + "," + std::to_string(r - 1) + ") design");

    std::vector<Edge> blocks;
    blocks.reserve(res.rows.size());
    for (int row : res.rows) blocks.push_back(candidate_blocks[static_cast<std::size_t>(row)]);
    Hypergraph g(r, m, std::move(blocks));
    const bool certified = verify_steiner(g).certified;
    if (!certified) throw Error("exact cover produced a non-design (internal error)");
    SteinerSystem sys{std::move(g), m, r, certified};
    if (registry) registry->store(sys);
    return sys;
}

} // namespace turanlab
