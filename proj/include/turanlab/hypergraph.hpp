#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "turanlab/errors.hpp"

namespace turanlab {

using Vertex = int;

/// An edge is a strictly increasing tuple of vertex ids.
using Edge = std::vector<Vertex>;

inline int intersection_size(const Edge& a, const Edge& b) {
    int count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++count; ++ia; ++ib; }
    }
    return count;
}

inline Edge edge_intersection(const Edge& a, const Edge& b) {
    Edge out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Edge edge_symmetric_difference(const Edge& a, const Edge& b) {
    Edge out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool edge_subset(const Edge& a, const Edge& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// An immutable r-uniform hypergraph on vertices 0..n-1.
///
/// Edges are kept sorted lexicographically with duplicates removed, so two
/// graphs are equal iff their edge vectors are equal. When n <= 64 every edge
/// also carries a 64-bit vertex mask; the pattern detectors use popcount on
/// these masks for their pair/triple scans.
class Hypergraph {
public:
    Hypergraph(int r, int n, std::vector<Edge> edges) : r_(r), n_(n), edges_(std::move(edges)) {
        if (r_ < 1) throw ValidationError("uniformity must be >= 1");
        if (n_ < 0) throw ValidationError("vertex count must be >= 0");
        for (auto& e : edges_) {
            if (static_cast<int>(e.size()) != r_)
                throw ValidationError("edge arity " + std::to_string(e.size()) +
                                      " does not match uniformity " + std::to_string(r_));
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] < 0 || e[i] >= n_)
                    throw ValidationError("vertex id " + std::to_string(e[i]) + " out of range [0," +
                                          std::to_string(n_) + ")");
                if (i > 0 && e[i] == e[i - 1])
                    throw ValidationError("duplicate vertex " + std::to_string(e[i]) + " in edge");
            }
            if (!std::is_sorted(e.begin(), e.end()))
                throw ValidationError("edge vertices must be strictly increasing");
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        if (n_ <= 64) {
            masks_.reserve(edges_.size());
            for (const auto& e : edges_) {
                std::uint64_t m = 0;
                for (Vertex v : e) m |= std::uint64_t{1} << v;
                masks_.push_back(m);
            }
        }
    }

    static Hypergraph empty(int r, int n) { return Hypergraph(r, n, {}); }

    int uniformity() const { return r_; }
    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_[i]; }

    bool has_masks() const { return n_ <= 64; }
    std::uint64_t mask(std::size_t i) const { return masks_[i]; }
    const std::vector<std::uint64_t>& masks() const { return masks_; }

    bool contains_edge(const Edge& e) const {
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    /// Number of edges containing v.
    std::size_t degree(Vertex v) const {
        std::size_t d = 0;
        if (has_masks()) {
            const std::uint64_t bit = std::uint64_t{1} << v;
            for (std::uint64_t m : masks_) d += (m & bit) != 0;
        } else {
            for (const auto& e : edges_) d += std::binary_search(e.begin(), e.end(), v);
        }
        return d;
    }

    /// Link of a vertex set I: the (r-|I|)-graph {J : J disjoint from I, I u J an edge},
    /// on the same vertex label space.
    Hypergraph link(const Edge& I) const {
        Edge is = I;
        std::sort(is.begin(), is.end());
        is.erase(std::unique(is.begin(), is.end()), is.end());
        if (is.size() != I.size()) throw InvalidArgument("link: repeated vertex in I");
        const int k = static_cast<int>(is.size());
        if (k < 1 || k >= r_) throw InvalidArgument("link: |I| must satisfy 1 <= |I| <= r-1");
        for (Vertex v : is)
            if (v < 0 || v >= n_) throw InvalidArgument("link: vertex outside graph");
        std::vector<Edge> out;
        for (const auto& e : edges_) {
            if (intersection_size(e, is) != k) continue;
            Edge j;
            std::set_difference(e.begin(), e.end(), is.begin(), is.end(), std::back_inserter(j));
            out.push_back(std::move(j));
        }
        return Hypergraph(r_ - k, n_, std::move(out));
    }

    /// Subgraph induced on X, relabeled to 0..|X|-1 by increasing original id.
    /// Second element maps new id -> original id.
    std::pair<Hypergraph, std::vector<Vertex>> induce(const Edge& X) const {
        Edge xs = X;
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        for (Vertex v : xs)
            if (v < 0 || v >= n_) throw InvalidArgument("induce: vertex outside graph");
        std::vector<int> new_id(n_, -1);
        for (std::size_t i = 0; i < xs.size(); ++i) new_id[xs[i]] = static_cast<int>(i);
        std::vector<Edge> out;
        for (const auto& e : edges_) {
            Edge relabeled;
            relabeled.reserve(e.size());
            bool inside = true;
            for (Vertex v : e) {
                if (new_id[v] < 0) { inside = false; break; }
                relabeled.push_back(new_id[v]);
            }
            if (inside) out.push_back(std::move(relabeled));
        }
        return {Hypergraph(r_, static_cast<int>(xs.size()), std::move(out)), xs};
    }

    /// True iff every unordered vertex pair lies in a common edge.
    bool covers_pairs() const {
        if (n_ <= 1) return true;
        if (has_masks()) {
            std::vector<std::uint64_t> seen(static_cast<std::size_t>(n_), 0);
            for (std::size_t i = 0; i < edges_.size(); ++i)
                for (Vertex v : edges_[i]) seen[v] |= masks_[i];
            const std::uint64_t all = (n_ == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
            for (Vertex v = 0; v < n_; ++v)
                if ((seen[v] | (std::uint64_t{1} << v)) != all) return false;
            return true;
        }
        std::vector<std::vector<bool>> cov(n_, std::vector<bool>(n_, false));
        for (const auto& e : edges_)
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::size_t j = i + 1; j < e.size(); ++j) cov[e[i]][e[j]] = true;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!cov[u][v]) return false;
        return true;
    }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.r_ == b.r_ && a.n_ == b.n_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const Hypergraph& a, const Hypergraph& b) { return !(a == b); }

private:
    int r_;
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> masks_;
};

/// Lex enumeration of all k-subsets of [m].
inline std::vector<Edge> all_subsets(int m, int k) {
    std::vector<Edge> out;
    if (k < 0 || k > m) return out;
    Edge cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

namespace detail {

inline bool parse_int_token(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == tok.size();
}

} // namespace detail

/// Parse the HGR text format: header "r n m", then m edge lines of r strictly
/// increasing vertex ids. Lines starting with '#' are ignored.
inline Hypergraph parse_hgr(std::string_view text) {
    std::vector<std::vector<long long>> rows;
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<long long> nums;
        std::string tok;
        while (ls >> tok) {
            long long v;
            if (!detail::parse_int_token(tok, v)) throw ParseError("malformed token '" + tok + "'");
            nums.push_back(v);
        }
        rows.push_back(std::move(nums));
    }
    if (rows.empty()) throw ParseError("missing header line");
    if (rows[0].size() != 3) throw ParseError("header must be 'r n m'");
    const long long r = rows[0][0], n = rows[0][1], m = rows[0][2];
    if (r < 1 || n < 0 || m < 0 || r > 64 || n > (1 << 30))
        throw ParseError("header values out of range");
    if (static_cast<long long>(rows.size()) - 1 != m)
        throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(rows.size() - 1));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (static_cast<long long>(rows[i].size()) != r)
            throw ValidationError("edge line has " + std::to_string(rows[i].size()) +
                                  " ids, expected " + std::to_string(r));
        Edge e;
        e.reserve(rows[i].size());
        for (long long v : rows[i]) {
            if (v < 0 || v >= n)
                throw ValidationError("vertex id " + std::to_string(v) + " out of range");
            e.push_back(static_cast<Vertex>(v));
        }
        for (std::size_t j = 1; j < e.size(); ++j)
            if (e[j] < e[j - 1]) throw ParseError("edge vertices not strictly increasing");
        edges.push_back(std::move(e));
    }
    return Hypergraph(static_cast<int>(r), static_cast<int>(n), std::move(edges));
}

/// Canonical serialization: header then edges in lexicographic order, LF endings.
inline std::string to_hgr(const Hypergraph& g) {
    std::string out = std::to_string(g.uniformity()) + " " + std::to_string(g.vertex_count()) +
                      " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& e : g.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(e[i]);
        }
        out += '\n';
    }
    return out;
}

inline Hypergraph load_hgr(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hgr(buf.str());
}

inline void save_hgr(const Hypergraph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << to_hgr(g);
}

} // namespace turanlab
