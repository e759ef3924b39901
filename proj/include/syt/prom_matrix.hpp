#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "syt/perm.hpp"

namespace syt {

/// Square integer matrix encoding all promotion permutations at once: an
/// entry i at (a, b) means prom_i sends a to b.
class PromotionMatrix {
public:
    PromotionMatrix() = default;
    explicit PromotionMatrix(int n) : n_(n), m_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

    int size() const { return n_; }

    /// 1-based (row, col) access.
    int& at(int row, int col) { return m_[index(row, col)]; }
    int at(int row, int col) const { return m_[index(row, col)]; }

    /// Cartesian access: M(x, y) = M_{n+1-y, x}, so (1,1) is the lower-left entry.
    int cart(int x, int y) const { return at(n_ + 1 - y, x); }

    enum class Quadrant { NE, SE, SW, NW };

    /// n/2 x n/2 corner block of an even-sized matrix.
    PromotionMatrix block(Quadrant q) const {
        if (n_ % 2 != 0) throw std::invalid_argument("blocks need an even matrix size");
        const int h = n_ / 2;
        const int row0 = (q == Quadrant::NE || q == Quadrant::NW) ? 0 : h;
        const int col0 = (q == Quadrant::NE || q == Quadrant::SE) ? h : 0;
        PromotionMatrix b(h);
        for (int r = 1; r <= h; ++r)
            for (int c = 1; c <= h; ++c) b.at(r, c) = at(row0 + r, col0 + c);
        return b;
    }

    /// Positions holding `value`, as the permutation row -> col. Throws if the
    /// positions do not form a full permutation.
    Permutation extract(int value) const {
        std::vector<int> v(static_cast<std::size_t>(n_), 0);
        for (int r = 1; r <= n_; ++r)
            for (int c = 1; c <= n_; ++c)
                if (at(r, c) == value) {
                    if (v[static_cast<std::size_t>(r) - 1] != 0)
                        throw std::invalid_argument("value appears twice in a row");
                    v[static_cast<std::size_t>(r) - 1] = c;
                }
        return Permutation(std::move(v));
    }

    /// Rendering with "·" for zeros, columns aligned.
    std::string to_text() const {
        std::size_t width = 1;
        for (int x : m_) width = std::max(width, std::to_string(x).size());
        std::ostringstream os;
        for (int r = 1; r <= n_; ++r) {
            for (int c = 1; c <= n_; ++c) {
                if (c > 1) os << ' ';
                const int v = at(r, c);
                const std::string s = v == 0 ? std::string("·") : std::to_string(v);
                for (std::size_t disp = v == 0 ? 1 : s.size(); disp < width; ++disp) os << ' ';
                os << s;
            }
            os << '\n';
        }
        return os.str();
    }

    friend bool operator==(const PromotionMatrix&, const PromotionMatrix&) = default;

private:
    std::size_t index(int row, int col) const {
        if (row < 1 || row > n_ || col < 1 || col > n_) throw std::out_of_range("matrix index");
        return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(col - 1);
    }

    int n_ = 0;
    std::vector<int> m_;
};

/// Structural facts that hold for every promotion matrix of a tableau with r
/// rows: zero diagonal; each row/column read cyclically east/north from the
/// diagonal (skipping zeros) spells 1..r-1; entry i at (a,b) pairs with r-i
/// at (b,a).
inline bool promotion_matrix_structure_ok(const PromotionMatrix& m, int r) {
    const int n = m.size();
    for (int a = 1; a <= n; ++a)
        if (m.at(a, a) != 0) return false;
    for (int a = 1; a <= n; ++a) {
        int expect_row = 1, expect_col = 1;
        for (int step = 1; step < n; ++step) {
            const int east = m.at(a, (a + step - 1) % n + 1);
            if (east != 0 && east != expect_row++) return false;
            const int north = m.at(((a - step - 1) % n + n) % n + 1, a);
            if (north != 0 && north != expect_col++) return false;
        }
        if (expect_row != r || expect_col != r) return false;
    }
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if ((m.at(a, b) != 0) != (m.at(b, a) != 0)) return false;
            else if (m.at(a, b) != 0 && m.at(b, a) != r - m.at(a, b)) return false;
    return true;
}

}  // namespace syt
