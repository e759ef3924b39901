#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "syt/jdt.hpp"
#include "syt/partition.hpp"
#include "syt/prom_matrix.hpp"
#include "syt/tableau.hpp"

namespace syt {

struct LocalRuleResult {
    Partition completed;
    std::optional<int> decoration;  // 1-based upper row of two vertically adjacent added cells
};

namespace detail {

inline std::vector<int> padded(const Partition& p, int len) {
    std::vector<int> v(static_cast<std::size_t>(len), 0);
    for (int i = 0; i < p.rows(); ++i) v[static_cast<std::size_t>(i)] = p.part(i);
    return v;
}

// completed = sort(nu + kappa - known), where sorting is at most one adjacent
// swap; the swap row is the decoration.
inline LocalRuleResult sort_rule(const Partition& kappa, const Partition& known, const Partition& nu) {
    if (!known.contains(kappa) || !nu.contains(known) ||
        known.cells() != kappa.cells() + 1 || nu.cells() != kappa.cells() + 2)
        throw std::invalid_argument("local rule needs kappa -> known -> nu adding one cell each");
    const int len = std::max({kappa.rows(), known.rows(), nu.rows()});
    const std::vector<int> k = padded(kappa, len), l = padded(known, len), v = padded(nu, len);
    std::vector<int> sum(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        sum[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] + k[static_cast<std::size_t>(i)] -
                                           l[static_cast<std::size_t>(i)];
        if (sum[static_cast<std::size_t>(i)] < 0) throw std::invalid_argument("local rule inputs are inconsistent");
    }
    std::optional<int> decoration;
    for (int i = 0; i + 1 < len; ++i)
        if (sum[static_cast<std::size_t>(i)] < sum[static_cast<std::size_t>(i) + 1]) {
            if (decoration) throw std::invalid_argument("local rule inputs are inconsistent");
            std::swap(sum[static_cast<std::size_t>(i)], sum[static_cast<std::size_t>(i) + 1]);
            decoration = i + 1;
        }
    Partition completed{std::vector<int>(sum)};  // throws if still unsorted
    if (!completed.contains(kappa) || !nu.contains(completed) || completed.cells() != kappa.cells() + 1)
        throw std::invalid_argument("local rule inputs are inconsistent");
    return {std::move(completed), decoration};
}

}  // namespace detail

/// Complete the lower-right corner mu of the square (kappa lower-left,
/// lambda upper-left, nu upper-right): mu = sort(nu + kappa - lambda).
inline LocalRuleResult local_rule_down(const Partition& kappa, const Partition& lambda, const Partition& nu) {
    return detail::sort_rule(kappa, lambda, nu);
}

/// Complete the upper-left corner lambda given kappa, mu (lower-right), nu.
inline LocalRuleResult local_rule_up(const Partition& kappa, const Partition& mu, const Partition& nu) {
    return detail::sort_rule(kappa, mu, nu);
}

/// Promotion-evacuation diagram of a rectangular tableau: a parallelogram of
/// partitions whose j-th row is the chain of the j-th promotion power and
/// whose last column, read bottom-to-top, is the chain of the evacuation.
class PEDiagram {
public:
    explicit PEDiagram(const StandardTableau& t) {
        if (!t.is_rectangular()) throw std::invalid_argument("PE diagram needs a rectangular tableau");
        n_ = t.size();
        rows_.reserve(static_cast<std::size_t>(n_) + 1);
        rows_.push_back(chain_of(t));
        decorations_.assign(static_cast<std::size_t>(n_) + 1, {});
        const Partition full = t.shape();
        for (int j = 1; j <= n_; ++j) {
            const std::vector<Partition>& above = rows_[static_cast<std::size_t>(j) - 1];
            std::vector<Partition> row;
            row.reserve(static_cast<std::size_t>(n_) + 1);
            row.emplace_back();
            std::vector<int> decs(static_cast<std::size_t>(n_) + 1, 0);
            for (int t_col = j + 1; t_col <= j + n_ - 1; ++t_col) {
                // square corners: kappa = row[j][t-1], lambda = row[j-1][t-1], nu = row[j-1][t]
                LocalRuleResult res = local_rule_down(row.back(), above[static_cast<std::size_t>(t_col - j)],
                                                      above[static_cast<std::size_t>(t_col - j + 1)]);
                if (res.decoration) decs[static_cast<std::size_t>(t_col - j)] = *res.decoration;
                row.push_back(std::move(res.completed));
            }
            if (n_ >= 1) {
                if (!full.contains(row.back()) || row.back().cells() != n_ - 1)
                    throw std::logic_error("PE diagram row cannot complete to the rectangle");
                row.push_back(full);
            }
            rows_.push_back(std::move(row));
            decorations_[static_cast<std::size_t>(j)] = std::move(decs);
        }
    }

    int size() const { return n_; }

    /// Partition at diagram row j (0..n), diagram column t (j..j+n).
    const Partition& at(int j, int t) const {
        if (j < 0 || j > n_ || t < j || t > j + n_) throw std::out_of_range("PE diagram index");
        return rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(t - j)];
    }

    /// Decoration of the square whose bottom row is j (1..n) and right column
    /// is t (j+1..j+n-1); 0 when the square is undecorated.
    int decoration(int j, int t) const {
        if (j < 1 || j > n_ || t <= j || t >= j + n_) throw std::out_of_range("PE square index");
        return decorations_[static_cast<std::size_t>(j)][static_cast<std::size_t>(t - j)];
    }

    /// Chain stored in row j, i.e. the chain of the j-th promotion power.
    PartitionChain row_chain(int j) const {
        return rows_[static_cast<std::size_t>(j)];
    }

    /// Column n read bottom-to-top: the chain of the evacuation.
    PartitionChain evacuation_chain() const {
        PartitionChain chain;
        chain.reserve(static_cast<std::size_t>(n_) + 1);
        for (int j = n_; j >= 0; --j) chain.push_back(at(j, n_));
        return chain;
    }

private:
    int n_ = 0;
    std::vector<std::vector<Partition>> rows_;        // rows_[j][t-j]
    std::vector<std::vector<int>> decorations_;       // decorations_[j][t-j], 0 = none
};

inline PEDiagram pe_diagram(const StandardTableau& t) { return PEDiagram(t); }

/// Wrap the diagram decorations into an n x n matrix: matrix row j holds the
/// decorations of square-row j at columns t mod n; the diagonal stays 0.
inline PromotionMatrix promotion_matrix_from_diagram(const StandardTableau& t) {
    const PEDiagram d(t);
    const int n = d.size();
    PromotionMatrix m(n);
    for (int j = 1; j <= n; ++j)
        for (int t_col = j + 1; t_col <= j + n - 1; ++t_col) {
            const int dec = d.decoration(j, t_col);
            if (dec != 0) m.at(j, (t_col - 1) % n + 1) = dec;
        }
    return m;
}

/// The (n+1) x (n+1) block of partitions governing the northeast quadrant of
/// the promotion matrix of stack(P, Q), in Cartesian coordinates: the bottom
/// edge is the chain of Q, the left edge the chain of evacuate(P), and the
/// interior the vertical sum of the two edges. Construction is double-checked
/// against a local-rule fill from the top and left edges.
class NEGrowthGrid {
public:
    NEGrowthGrid(const StandardTableau& p, const StandardTableau& q) {
        if (!p.is_rectangular() || !q.is_rectangular() || p.shape() != q.shape())
            throw std::invalid_argument("growth grid needs two rectangular tableaux of equal shape");
        n_ = p.size();
        const PartitionChain q_chain = chain_of(q);
        const PartitionChain ep_chain = chain_of(evacuate(p));
        lam_.assign(static_cast<std::size_t>(n_) + 1, std::vector<Partition>(static_cast<std::size_t>(n_) + 1));
        for (int x = 0; x <= n_; ++x)
            for (int y = 0; y <= n_; ++y)
                lam_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
                    vertical_sum(q_chain[static_cast<std::size_t>(x)], ep_chain[static_cast<std::size_t>(y)]);

        // independent route: local rules from the top edge (rectangle +' Q
        // chain) and the left edge (chain of evacuate(P))
        const Partition full = p.shape();
        std::vector<Partition> prev_row;  // y = n
        prev_row.reserve(static_cast<std::size_t>(n_) + 1);
        for (int x = 0; x <= n_; ++x) prev_row.push_back(vertical_sum(full, q_chain[static_cast<std::size_t>(x)]));
        for (int y = n_ - 1; y >= 0; --y) {
            std::vector<Partition> row;
            row.reserve(static_cast<std::size_t>(n_) + 1);
            row.push_back(ep_chain[static_cast<std::size_t>(y)]);
            for (int x = 1; x <= n_; ++x)
                row.push_back(local_rule_down(row.back(), prev_row[static_cast<std::size_t>(x) - 1],
                                              prev_row[static_cast<std::size_t>(x)]).completed);
            for (int x = 0; x <= n_; ++x)
                if (row[static_cast<std::size_t>(x)] != at(x, y))
                    throw std::logic_error("growth grid: local rules disagree with the vertical-sum form");
            prev_row = std::move(row);
        }
    }

    int size() const { return n_; }
    const Partition& at(int x, int y) const {
        return lam_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    }

private:
    int n_ = 0;
    std::vector<std::vector<Partition>> lam_;  // lam_[x][y]
};

inline NEGrowthGrid ne_growth_grid(const StandardTableau& p, const StandardTableau& q) {
    return NEGrowthGrid(p, q);
}

}  // namespace syt
