#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "syt/perm.hpp"

namespace syt {

/// Perfect matching on {1..2n}: n disjoint blocks {a < b}, sorted by opener.
class PerfectMatching {
public:
    PerfectMatching() = default;

    explicit PerfectMatching(std::vector<std::pair<int, int>> blocks) : blocks_(std::move(blocks)) {
        const int m = 2 * static_cast<int>(blocks_.size());
        std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
        for (auto& [a, b] : blocks_) {
            if (a > b) std::swap(a, b);
            if (a < 1 || b > m || a == b) throw std::invalid_argument("matching blocks must pair distinct points of 1..2n");
            if (seen[static_cast<std::size_t>(a)] || seen[static_cast<std::size_t>(b)])
                throw std::invalid_argument("matching blocks must be disjoint");
            seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = true;
        }
        std::sort(blocks_.begin(), blocks_.end());
    }

    const std::vector<std::pair<int, int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int ground_size() const { return 2 * block_count(); }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(blocks_[i].first) + "-" + std::to_string(blocks_[i].second);
        }
        return s;
    }

    friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;

private:
    std::vector<std::pair<int, int>> blocks_;  // sorted by opener, each (a < b)
};

/// The matching whose blocks are the 2-cycles of a fixed-point free involution.
inline PerfectMatching matching_from_involution(const Permutation& rho) {
    if (rho.size() % 2 != 0 || !rho.is_involution() || !rho.is_fixed_point_free())
        throw std::invalid_argument("need a fixed-point free involution of even size");
    std::vector<std::pair<int, int>> blocks;
    for (int i = 1; i <= rho.size(); ++i)
        if (i < rho(i)) blocks.emplace_back(i, rho(i));
    return PerfectMatching(std::move(blocks));
}

/// Largest k admitting blocks {i_1<j_1},...,{i_k<j_k} with
/// i_1 < ... < i_k < j_1 < ... < j_k (all k chords pairwise cross).
/// For each candidate first block, the rest is a longest-increasing-chain
/// problem over the blocks it crosses.
inline int crossing_number(const PerfectMatching& m) {
    if (m.block_count() == 0) return 0;
    const auto& blocks = m.blocks();
    int best = 1;
    for (const auto& [a, b] : blocks) {
        std::vector<int> closers;  // blocks (c, d) with a < c < b < d, in opener order
        for (const auto& [c, d] : blocks)
            if (a < c && c < b && b < d) closers.push_back(d);
        std::vector<int> tails;
        for (int d : closers) {
            auto it = std::lower_bound(tails.begin(), tails.end(), d);
            if (it == tails.end()) tails.push_back(d);
            else *it = d;
        }
        best = std::max(best, 1 + static_cast<int>(tails.size()));
    }
    return best;
}

/// Largest k admitting blocks with i_1 < ... < i_k < j_k < ... < j_1 (chords
/// nested one inside the next): longest chain in the containment order.
inline int nesting_number(const PerfectMatching& m) {
    if (m.block_count() == 0) return 0;
    std::vector<int> tails;  // longest strictly decreasing closer subsequence, openers ascending
    for (const auto& [a, b] : m.blocks()) {
        auto it = std::lower_bound(tails.begin(), tails.end(), -b);
        if (it == tails.end()) tails.push_back(-b);
        else *it = -b;
    }
    return static_cast<int>(tails.size());
}

}  // namespace syt
