#pragma once

#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "syt/partition.hpp"

namespace syt {

class StandardTableau;

/// Saturated chain in Young's lattice starting at the empty partition.
using PartitionChain = std::vector<Partition>;

/// Word of row indices (1-based) satisfying the ballot condition.
using LatticeWord = std::vector<int>;

/// Standard Young tableau: entries 1..n, strictly increasing along rows and columns.
class StandardTableau {
public:
    StandardTableau() = default;

    explicit StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        std::vector<int> lens;
        lens.reserve(rows_.size());
        int n = 0;
        for (const auto& r : rows_) {
            if (r.empty()) throw std::invalid_argument("tableau rows must be non-empty");
            lens.push_back(static_cast<int>(r.size()));
            n += static_cast<int>(r.size());
        }
        shape_ = Partition(std::move(lens));  // validates weakly decreasing, no empty rows
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                int v = rows_[i][j];
                if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                    throw std::invalid_argument("tableau entries must be exactly 1..n");
                seen[static_cast<std::size_t>(v)] = true;
                if (j > 0 && rows_[i][j - 1] >= v)
                    throw std::invalid_argument("tableau rows must strictly increase");
                if (i > 0 && j < rows_[i - 1].size() && rows_[i - 1][j] >= v)
                    throw std::invalid_argument("tableau columns must strictly increase");
            }
        }
    }

    const Partition& shape() const { return shape_; }
    int size() const { return shape_.cells(); }
    int row_count() const { return shape_.rows(); }
    int row_length(int r) const { return shape_.part(r); }
    bool is_rectangular() const {
        return shape_.empty() || shape_.part(0) == shape_.part(shape_.rows() - 1);
    }

    /// Entry at 0-based (row, col).
    int at(int r, int c) const { return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    /// 0-based (row, col) of an entry; linear scan.
    std::pair<int, int> find(int value) const {
        for (int r = 0; r < row_count(); ++r)
            for (int c = 0; c < row_length(r); ++c)
                if (at(r, c) == value) return {r, c};
        throw std::invalid_argument("entry not present");
    }

    std::string to_string() const {
        std::ostringstream os;
        for (int r = 0; r < row_count(); ++r) {
            if (r) os << '\n';
            for (int c = 0; c < row_length(r); ++c) {
                if (c) os << ' ';
                os << at(r, c);
            }
        }
        return os.str();
    }

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// Shapes of the subtableaux of entries <= i, for i = 0..n.
inline PartitionChain chain_of(const StandardTableau& t) {
    const int n = t.size();
    PartitionChain chain;
    chain.reserve(static_cast<std::size_t>(n) + 1);
    chain.emplace_back();
    std::vector<int> row_of(static_cast<std::size_t>(n) + 1, 0);
    for (int r = 0; r < t.row_count(); ++r)
        for (int c = 0; c < t.row_length(r); ++c)
            row_of[static_cast<std::size_t>(t.at(r, c))] = r;
    for (int i = 1; i <= n; ++i)
        chain.push_back(chain.back().add_cell(row_of[static_cast<std::size_t>(i)]));
    return chain;
}

inline StandardTableau tableau_from_chain(const PartitionChain& chain) {
    if (chain.empty() || !chain.front().empty())
        throw std::invalid_argument("chain must start at the empty partition");
    const Partition& shape = chain.back();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
    for (int i = 0; i < shape.rows(); ++i) rows[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(shape.part(i)));
    for (std::size_t i = 1; i < chain.size(); ++i) {
        int r = chain[i - 1].cover_row(chain[i]);
        if (r < 0) throw std::invalid_argument("chain steps must add exactly one cell");
        rows[static_cast<std::size_t>(r)].push_back(static_cast<int>(i));
    }
    return StandardTableau(std::move(rows));
}

/// Word w with w_i = 1-based row of entry i.
inline LatticeWord lattice_word(const StandardTableau& t) {
    LatticeWord w(static_cast<std::size_t>(t.size()), 0);
    for (int r = 0; r < t.row_count(); ++r)
        for (int c = 0; c < t.row_length(r); ++c)
            w[static_cast<std::size_t>(t.at(r, c)) - 1] = r + 1;
    return w;
}

inline StandardTableau tableau_from_lattice_word(const LatticeWord& w) {
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < w.size(); ++i) {
        int r = w[i] - 1;
        if (r < 0 || r > static_cast<int>(rows.size()))
            throw std::invalid_argument("word violates the ballot condition");
        if (r == static_cast<int>(rows.size())) rows.emplace_back();
        if (r > 0 && rows[static_cast<std::size_t>(r - 1)].size() <= rows[static_cast<std::size_t>(r)].size())
            throw std::invalid_argument("word violates the ballot condition");
        rows[static_cast<std::size_t>(r)].push_back(static_cast<int>(i) + 1);
    }
    return StandardTableau(std::move(rows));
}

inline StandardTableau transpose(const StandardTableau& t) {
    const Partition conj = t.shape().conjugate();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(conj.rows()));
    for (int i = 0; i < conj.rows(); ++i)
        rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(conj.part(i)));
    for (int r = 0; r < t.row_count(); ++r)
        for (int c = 0; c < t.row_length(r); ++c)
            rows[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = t.at(r, c);
    return StandardTableau(std::move(rows));
}

/// Place q (entries shifted by |p|) below p. Both must be rectangles of the
/// same shape; the result is standard on the doubled rectangle.
inline StandardTableau stack(const StandardTableau& p, const StandardTableau& q) {
    if (!p.is_rectangular() || !q.is_rectangular() || p.shape() != q.shape())
        throw std::invalid_argument("stack requires two rectangular tableaux of equal shape");
    const int n = p.size();
    std::vector<std::vector<int>> rows = p.rows();
    for (const auto& row : q.rows()) {
        std::vector<int> shifted;
        shifted.reserve(row.size());
        for (int v : row) shifted.push_back(v + n);
        rows.push_back(std::move(shifted));
    }
    return StandardTableau(std::move(rows));
}

/// Number of standard tableaux of the shape, by the hook length formula.
/// Exact prime-exponent arithmetic; throws if the count overflows 64 bits.
inline std::uint64_t hook_count(const Partition& shape) {
    const int n = shape.cells();
    if (n == 0) return 1;
    // exponent of each prime in n! minus its exponent in the product of hooks
    std::vector<int> exps(static_cast<std::size_t>(n) + 1, 0);
    auto add_factor = [&](int m, int sign) {
        for (int p = 2; p * p <= m; ++p)
            while (m % p == 0) { exps[static_cast<std::size_t>(p)] += sign; m /= p; }
        if (m > 1) exps[static_cast<std::size_t>(m)] += sign;
    };
    for (int k = 2; k <= n; ++k) add_factor(k, +1);
    const Partition conj = shape.conjugate();
    for (int r = 0; r < shape.rows(); ++r)
        for (int c = 0; c < shape.part(r); ++c) {
            int hook = (shape.part(r) - c) + (conj.part(c) - r) - 1;
            if (hook > 1) add_factor(hook, -1);
        }
    unsigned __int128 acc = 1;
    for (int p = 2; p <= n; ++p) {
        if (exps[static_cast<std::size_t>(p)] < 0)
            throw std::logic_error("hook product does not divide n!");
        for (int e = 0; e < exps[static_cast<std::size_t>(p)]; ++e) {
            acc *= static_cast<unsigned>(p);
            if (acc > static_cast<unsigned __int128>(UINT64_MAX))
                throw std::overflow_error("tableau count exceeds 64 bits");
        }
    }
    return static_cast<std::uint64_t>(acc);
}

/// Visit every standard tableau of the shape, ordered by lattice word
/// (lexicographically ascending). The cap guards accidental blowups.
inline void for_each_syt(const Partition& shape, const std::function<void(const StandardTableau&)>& visit,
                         int cell_cap = 30) {
    const int n = shape.cells();
    if (n > cell_cap) throw std::invalid_argument("shape exceeds the enumeration cell cap");
    std::vector<int> filled(static_cast<std::size_t>(shape.rows()), 0);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            std::vector<std::vector<int>> copy = rows;
            visit(StandardTableau(std::move(copy)));
            return;
        }
        for (int r = 0; r < shape.rows(); ++r) {
            if (filled[static_cast<std::size_t>(r)] >= shape.part(r)) continue;
            if (r > 0 && filled[static_cast<std::size_t>(r - 1)] <= filled[static_cast<std::size_t>(r)]) continue;
            filled[static_cast<std::size_t>(r)]++;
            rows[static_cast<std::size_t>(r)].push_back(next);
            self(self, next + 1);
            rows[static_cast<std::size_t>(r)].pop_back();
            filled[static_cast<std::size_t>(r)]--;
        }
    };
    rec(rec, 1);
}

inline std::vector<StandardTableau> enumerate_syt(const Partition& shape, int cell_cap = 30) {
    std::vector<StandardTableau> out;
    for_each_syt(shape, [&](const StandardTableau& t) { out.push_back(t); }, cell_cap);
    return out;
}

}  // namespace syt
