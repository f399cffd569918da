#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "turanlab/errors.hpp"

namespace turanlab {

struct ExactCoverInstance {
    int num_items = 0;
    std::vector<std::vector<int>> rows; // each row: increasing item ids
};

enum class CoverStatus { Solved, Exhausted, BudgetExceeded };

struct CoverResult {
    CoverStatus status = CoverStatus::Exhausted;
    std::vector<int> rows;       // chosen row indices (sorted), valid when Solved
    std::uint64_t nodes = 0;     // row choices attempted
};

namespace detail {

/// Knuth's dancing links over a toroidal node pool. Column choice is
/// min-remaining-candidates with ties broken by lowest item id; rows are
/// traversed in insertion order, so the first solution is deterministic.
class DancingLinks {
public:
    explicit DancingLinks(const ExactCoverInstance& inst) : ncols_(inst.num_items) {
        if (inst.num_items < 0) throw InvalidArgument("negative item count");
        std::size_t node_count = static_cast<std::size_t>(ncols_) + 1;
        for (const auto& row : inst.rows) {
            if (row.empty()) throw InvalidArgument("exact cover row must be non-empty");
            node_count += row.size();
        }
        left_.resize(node_count);
        right_.resize(node_count);
        up_.resize(node_count);
        down_.resize(node_count);
        col_.resize(node_count);
        row_id_.resize(node_count, -1);
        size_.assign(static_cast<std::size_t>(ncols_), 0);

        // header ring: root = ncols_, columns 0..ncols_-1 in item order
        const int root = ncols_;
        for (int c = 0; c <= ncols_; ++c) {
            left_[c] = (c == 0) ? root : c - 1;
            right_[c] = (c == ncols_) ? 0 : c + 1;
            up_[c] = c;
            down_[c] = c;
            col_[c] = c;
        }
        left_[0] = root;
        right_[root] = 0;
        left_[root] = ncols_ - 1 >= 0 ? ncols_ - 1 : root;
        if (ncols_ == 0) { right_[root] = root; left_[root] = root; }

        int node = ncols_ + 1;
        for (std::size_t r = 0; r < inst.rows.size(); ++r) {
            int first = -1;
            int prev_item = -1;
            for (int item : inst.rows[r]) {
                if (item < 0 || item >= ncols_) throw InvalidArgument("row item out of range");
                if (item <= prev_item) throw InvalidArgument("row items must be increasing");
                prev_item = item;
                col_[node] = item;
                row_id_[node] = static_cast<int>(r);
                // vertical insertion at the bottom of the column
                up_[node] = up_[item];
                down_[node] = item;
                down_[up_[item]] = node;
                up_[item] = node;
                ++size_[static_cast<std::size_t>(item)];
                if (first < 0) {
                    first = node;
                    left_[node] = node;
                    right_[node] = node;
                } else {
                    left_[node] = left_[first];
                    right_[node] = first;
                    right_[left_[first]] = node;
                    left_[first] = node;
                }
                ++node;
            }
        }
    }

    /// Pre-select a row before the search starts. Returns false when the row
    /// is no longer available (conflicting forced rows).
    bool force_row(int row, const ExactCoverInstance& inst) {
        if (row < 0 || row >= static_cast<int>(inst.rows.size()))
            throw InvalidArgument("forced row index out of range");
        const int item = inst.rows[static_cast<std::size_t>(row)][0];
        // the item column must still be active and contain the row
        for (int c = right_[ncols_]; c != ncols_; c = right_[c]) {
            if (c != item) continue;
            for (int n = down_[c]; n != c; n = down_[n]) {
                if (row_id_[n] != row) continue;
                cover(c);
                for (int m = right_[n]; m != n; m = right_[m]) cover(col_[m]);
                solution_.push_back(row);
                return true;
            }
            return false;
        }
        return false;
    }

    CoverResult solve(std::uint64_t node_budget) {
        CoverResult result;
        budget_ = node_budget;
        nodes_ = 0;
        exceeded_ = false;
        found_ = false;
        search();
        result.nodes = nodes_;
        if (found_) {
            result.status = CoverStatus::Solved;
            result.rows = solution_;
            std::sort(result.rows.begin(), result.rows.end());
        } else {
            result.status = exceeded_ ? CoverStatus::BudgetExceeded : CoverStatus::Exhausted;
        }
        return result;
    }

private:
    void cover(int c) {
        right_[left_[c]] = right_[c];
        left_[right_[c]] = left_[c];
        for (int i = down_[c]; i != c; i = down_[i]) {
            for (int j = right_[i]; j != i; j = right_[j]) {
                up_[down_[j]] = up_[j];
                down_[up_[j]] = down_[j];
                --size_[static_cast<std::size_t>(col_[j])];
            }
        }
    }

    void uncover(int c) {
        for (int i = up_[c]; i != c; i = up_[i]) {
            for (int j = left_[i]; j != i; j = left_[j]) {
                ++size_[static_cast<std::size_t>(col_[j])];
                up_[down_[j]] = j;
                down_[up_[j]] = j;
            }
        }
        right_[left_[c]] = c;
        left_[right_[c]] = c;
    }

    void search() {
        const int root = ncols_;
        if (right_[root] == root) { found_ = true; return; }
        // min remaining candidates; header ring keeps ascending item order,
        // so the first strict minimum is the lowest item id
        int best = -1;
        std::size_t best_size = ~std::size_t{0};
        for (int c = right_[root]; c != root; c = right_[c]) {
            if (size_[static_cast<std::size_t>(c)] < best_size) {
                best_size = size_[static_cast<std::size_t>(c)];
                best = c;
            }
        }
        if (best_size == 0) return;
        cover(best);
        for (int i = down_[best]; i != best && !found_; i = down_[i]) {
            if (nodes_ >= budget_) { exceeded_ = true; break; }
            ++nodes_;
            solution_.push_back(row_id_[i]);
            for (int j = right_[i]; j != i; j = right_[j]) cover(col_[j]);
            search();
            for (int j = left_[i]; j != i; j = left_[j]) uncover(col_[j]);
            if (!found_) solution_.pop_back();
        }
        uncover(best);
    }

    int ncols_;
    std::vector<int> left_, right_, up_, down_, col_, row_id_;
    std::vector<std::size_t> size_;
    std::vector<int> solution_;
    std::uint64_t budget_ = 0, nodes_ = 0;
    bool exceeded_ = false, found_ = false;
};

} // namespace detail

/// First-solution exact cover. `forced_rows` are pre-selected (used for
/// symmetry breaking); a conflict among them yields Exhausted immediately.
inline CoverResult solve_exact_cover(const ExactCoverInstance& inst,
                                     std::uint64_t node_budget = 1'000'000'000,
                                     const std::vector<int>& forced_rows = {}) {
    for (const auto& row : inst.rows) {
        if (row.empty()) throw InvalidArgument("exact cover row must be non-empty");
        for (int item : row)
            if (item < 0 || item >= inst.num_items)
                throw InvalidArgument("exact cover row item out of range");
    }
    detail::DancingLinks dlx(inst);
    for (int row : forced_rows) {
        if (!dlx.force_row(row, inst)) return CoverResult{CoverStatus::Exhausted, {}, 0};
    }
    return dlx.solve(node_budget);
}

} // namespace turanlab
