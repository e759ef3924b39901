#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "syt/perm.hpp"
#include "syt/tableau.hpp"

namespace syt {

struct RSPair {
    StandardTableau p;  // insertion tableau
    StandardTableau q;  // recording tableau
    friend bool operator==(const RSPair&, const RSPair&) = default;
};

/// Row insertion of a word with distinct letters. Returns the insertion and
/// recording tableaux (same shape).
inline RSPair rs_insert(const std::vector<int>& word) {
    {
        std::vector<int> sorted = word;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("insertion word must have distinct letters");
    }
    std::vector<std::vector<int>> p, q;
    for (std::size_t step = 0; step < word.size(); ++step) {
        int v = word[step];
        std::size_t row = 0;
        for (;; ++row) {
            if (row == p.size()) {
                p.emplace_back();
                q.emplace_back();
            }
            auto it = std::upper_bound(p[row].begin(), p[row].end(), v);
            if (it == p[row].end()) {
                p[row].push_back(v);
                q[row].push_back(static_cast<int>(step) + 1);
                break;
            }
            std::swap(v, *it);
        }
    }
    return {StandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

inline RSPair rs_insert(const Permutation& rho) { return rs_insert(rho.one_line()); }

/// Inverse of rs_insert on pairs of equal shape; the output satisfies
/// rs_insert(result) == (p, q).
inline Permutation rs_inverse(const StandardTableau& p, const StandardTableau& q) {
    if (p.shape() != q.shape()) throw std::invalid_argument("rs_inverse needs tableaux of equal shape");
    const int n = p.size();
    std::vector<std::vector<int>> rows = p.rows();
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int k = n; k >= 1; --k) {
        auto [r, c] = q.find(k);
        if (c != static_cast<int>(rows[static_cast<std::size_t>(r)].size()) - 1)
            throw std::invalid_argument("recording tableau is inconsistent with the shape");
        int v = rows[static_cast<std::size_t>(r)].back();
        rows[static_cast<std::size_t>(r)].pop_back();
        for (int row = r - 1; row >= 0; --row) {
            auto& line = rows[static_cast<std::size_t>(row)];
            auto it = std::lower_bound(line.begin(), line.end(), v);
            if (it == line.begin()) throw std::logic_error("reverse bump found no smaller entry");
            --it;  // rightmost entry smaller than v
            std::swap(v, *it);
        }
        word[static_cast<std::size_t>(k) - 1] = v;
        if (!rows.empty() && rows.back().empty()) rows.pop_back();
    }
    return Permutation(std::move(word));
}

/// Lengths of the longest strictly increasing and strictly decreasing
/// subsequences of a word with distinct letters.
inline std::pair<int, int> greene_stats(const std::vector<int>& word) {
    auto lis = [](const std::vector<int>& w) {
        std::vector<int> tails;
        for (int v : w) {
            auto it = std::lower_bound(tails.begin(), tails.end(), v);
            if (it == tails.end()) tails.push_back(v);
            else *it = v;
        }
        return static_cast<int>(tails.size());
    };
    std::vector<int> negated;
    negated.reserve(word.size());
    for (int v : word) negated.push_back(-v);
    return {lis(word), lis(negated)};
}

}  // namespace syt
