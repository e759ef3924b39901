#pragma once

#include <stdexcept>
#include <vector>

#include "syt/jdt.hpp"
#include "syt/perm.hpp"
#include "syt/prom_matrix.hpp"
#include "syt/tableau.hpp"

namespace syt {

/// The tuple (prom_1, ..., prom_{r-1}) of a rectangular tableau with r rows.
class PromTuple {
public:
    PromTuple() = default;
    explicit PromTuple(std::vector<Permutation> perms) : perms_(std::move(perms)) {}

    int count() const { return static_cast<int>(perms_.size()); }  // r - 1
    const Permutation& prom(int i) const {                         // 1-based
        if (i < 1 || i > count()) throw std::out_of_range("prom index");
        return perms_[static_cast<std::size_t>(i) - 1];
    }
    const std::vector<Permutation>& all() const { return perms_; }

    friend bool operator==(const PromTuple&, const PromTuple&) = default;

private:
    std::vector<Permutation> perms_;
};

/// prom_i(T)(j) = the entry that slides into row i during the j-th gromotion,
/// reduced mod n into {1..n}.
inline PromTuple prom_perms(const StandardTableau& t) {
    if (!t.is_rectangular()) throw std::invalid_argument("promotion permutations need a rectangular tableau");
    const int r = t.row_count();
    const int n = t.size();
    std::vector<std::vector<int>> lines(static_cast<std::size_t>(r > 0 ? r - 1 : 0),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    ShiftedTableau cur(t);
    for (int j = 1; j <= n; ++j) {
        GromoteResult g = gromote(cur);
        if (static_cast<int>(g.record.row_entries.size()) != r - 1)
            throw std::logic_error("rectangular gromotion must slide into every row once");
        for (const auto& [row, entry] : g.record.row_entries)
            lines[static_cast<std::size_t>(row) - 1][static_cast<std::size_t>(j) - 1] = (entry - 1) % n + 1;
        cur = std::move(g.tableau);
    }
    std::vector<Permutation> perms;
    perms.reserve(lines.size());
    for (auto& line : lines) perms.emplace_back(std::move(line));
    return PromTuple(std::move(perms));
}

/// PM(T) = sum over i of i * M(prom_i(T)), with M the row->column 0/1 matrix.
inline PromotionMatrix promotion_matrix(const PromTuple& tuple, int n) {
    PromotionMatrix m(n);
    for (int i = 1; i <= tuple.count(); ++i)
        for (int j = 1; j <= n; ++j) {
            int& slot = m.at(j, tuple.prom(i)(j));
            if (slot != 0) throw std::logic_error("promotion permutations collide in the matrix");
            slot = i;
        }
    return m;
}

inline PromotionMatrix promotion_matrix(const StandardTableau& t) {
    return promotion_matrix(prom_perms(t), t.size());
}

/// First n values of prom_i(S) for a stacked-shape tableau (2r rows, n = rc
/// cells per half), each reduced by n. A full permutation only when i = r.
inline std::vector<int> prom_ne(const StandardTableau& s, int i) {
    if (!s.is_rectangular() || s.row_count() % 2 != 0)
        throw std::invalid_argument("prom_ne needs a stacked-shape tableau with an even number of rows");
    const int n = s.size() / 2;
    const PromTuple tuple = prom_perms(s);
    const Permutation& p = tuple.prom(i);
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) out[static_cast<std::size_t>(j) - 1] = p(j) - n;
    return out;
}

/// Conjugate by the long cycle (1 2 ... n): value/position shifts mod n.
inline Permutation conjugate_by_cycle(const Permutation& p) {
    const int n = p.size();
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const int image = p(j % n + 1);             // rho(sigma(j))
        v[static_cast<std::size_t>(j) - 1] = (image + n - 2) % n + 1;  // sigma^{-1} of it
    }
    return Permutation(std::move(v));
}

/// Conjugate by the longest element: (w0 p w0)(j) = n+1 - p(n+1-j).
inline Permutation conjugate_by_longest(const Permutation& p) {
    const int n = p.size();
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) v[static_cast<std::size_t>(j) - 1] = n + 1 - p(n + 1 - j);
    return Permutation(std::move(v));
}

/// Per-clause results of the promotion/evacuation symmetry checks: (a) each
/// prom_i is a bijection, (b) promotion conjugates by the long cycle, (c)
/// evacuation conjugates prom_{r-i} by w0, (d) prom_{r-i} is the inverse.
struct DihedralReport {
    bool bijective = false;
    bool promotion_conjugates = false;
    bool evacuation_reflects = false;
    bool inverse_pairing = false;
    bool all() const { return bijective && promotion_conjugates && evacuation_reflects && inverse_pairing; }
};

inline DihedralReport verify_dihedral(const StandardTableau& t) {
    const int r = t.row_count();
    const PromTuple base = prom_perms(t);
    const PromTuple promoted = prom_perms(promote(t));
    const PromTuple evacuated = prom_perms(evacuate(t));
    DihedralReport rep;
    rep.bijective = true;  // Permutation construction enforces bijectivity
    rep.promotion_conjugates = true;
    rep.evacuation_reflects = true;
    rep.inverse_pairing = true;
    for (int i = 1; i <= r - 1; ++i) {
        if (promoted.prom(i) != conjugate_by_cycle(base.prom(i))) rep.promotion_conjugates = false;
        if (evacuated.prom(i) != conjugate_by_longest(base.prom(r - i))) rep.evacuation_reflects = false;
        if (base.prom(r - i) != base.prom(i).inverse()) rep.inverse_pairing = false;
    }
    return rep;
}

}  // namespace syt
