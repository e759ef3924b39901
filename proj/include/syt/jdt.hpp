#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "syt/tableau.hpp"

namespace syt {

/// Tableau on the shifted alphabet {offset+1, ..., offset+n}. Gromotion bumps
/// the offset by one each application instead of decrementing entries.
class ShiftedTableau {
public:
    ShiftedTableau() = default;

    ShiftedTableau(std::vector<std::vector<int>> rows, int offset) : rows_(std::move(rows)), offset_(offset) {
        std::vector<int> lens;
        int n = 0;
        for (const auto& r : rows_) {
            if (r.empty()) throw std::invalid_argument("tableau rows must be non-empty");
            lens.push_back(static_cast<int>(r.size()));
            n += static_cast<int>(r.size());
        }
        shape_ = Partition(std::move(lens));
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                int v = rows_[i][j] - offset_;
                if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                    throw std::invalid_argument("entries must be exactly offset+1..offset+n");
                seen[static_cast<std::size_t>(v)] = true;
                if (j > 0 && rows_[i][j - 1] >= rows_[i][j])
                    throw std::invalid_argument("rows must strictly increase");
                if (i > 0 && j < rows_[i - 1].size() && rows_[i - 1][j] >= rows_[i][j])
                    throw std::invalid_argument("columns must strictly increase");
            }
    }

    explicit ShiftedTableau(const StandardTableau& t) : ShiftedTableau(t.rows(), 0) {}

    const Partition& shape() const { return shape_; }
    int offset() const { return offset_; }
    int size() const { return shape_.cells(); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int at(int r, int c) const { return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

    /// Entries shifted back down to 1..n.
    StandardTableau to_standard() const {
        std::vector<std::vector<int>> rows = rows_;
        for (auto& row : rows)
            for (int& v : row) v -= offset_;
        return StandardTableau(std::move(rows));
    }

    friend bool operator==(const ShiftedTableau&, const ShiftedTableau&) = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    int offset_ = 0;
};

struct Cell {
    int row = 0;  // 0-based
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Trace of one jeu-de-taquin slide: the hole's path from (0,0) to an outer
/// corner, and which entry moved up into each row on the way.
struct SlideRecord {
    std::vector<Cell> path;
    std::map<int, int> row_entries;  // 1-based row i -> entry that slid from row i+1 into row i
};

struct GromoteResult {
    ShiftedTableau tableau;
    SlideRecord record;
};

/// One gromotion step: delete the minimum, slide, put max+1 in the vacated
/// corner. Entries are not decremented, so the alphabet shifts upward.
inline GromoteResult gromote(const ShiftedTableau& t) {
    if (t.size() == 0) throw std::invalid_argument("cannot gromote an empty tableau");
    std::vector<std::vector<int>> rows = t.rows();
    SlideRecord rec;
    int r = 0, c = 0;
    rec.path.push_back({0, 0});
    for (;;) {
        const bool has_right = c + 1 < static_cast<int>(rows[static_cast<std::size_t>(r)].size());
        const bool has_down = r + 1 < static_cast<int>(rows.size()) &&
                              c < static_cast<int>(rows[static_cast<std::size_t>(r) + 1].size());
        if (!has_right && !has_down) break;
        const bool slide_up = has_down &&
            (!has_right || rows[static_cast<std::size_t>(r) + 1][static_cast<std::size_t>(c)] <
                               rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) + 1]);
        if (slide_up) {
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                rows[static_cast<std::size_t>(r) + 1][static_cast<std::size_t>(c)];
            rec.row_entries[r + 1] = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            ++r;
        } else {
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) + 1];
            ++c;
        }
        rec.path.push_back({r, c});
    }
    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = t.offset() + t.size() + 1;
    return {ShiftedTableau(std::move(rows), t.offset() + 1), std::move(rec)};
}

/// Schuetzenberger promotion: gromote, then pull the alphabet back to 1..n.
inline StandardTableau promote(const StandardTableau& t) {
    if (t.size() == 0) return t;
    return gromote(ShiftedTableau(t)).tableau.to_standard();
}

inline StandardTableau promote_power(StandardTableau t, int k) {
    for (int i = 0; i < k; ++i) t = promote(t);
    return t;
}

/// Schuetzenberger evacuation: iterated delete-and-rectify, reading the
/// vacated outer corners in reverse.
inline StandardTableau evacuate(const StandardTableau& t) {
    const int n = t.size();
    std::vector<std::vector<int>> rows = t.rows();
    std::vector<std::vector<int>> out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) out[i].resize(rows[i].size(), 0);
    for (int step = 1; step <= n; ++step) {
        int r = 0, c = 0;
        for (;;) {
            const bool has_right = c + 1 < static_cast<int>(rows[static_cast<std::size_t>(r)].size());
            const bool has_down = r + 1 < static_cast<int>(rows.size()) &&
                                  c < static_cast<int>(rows[static_cast<std::size_t>(r) + 1].size());
            if (!has_right && !has_down) break;
            const bool slide_up = has_down &&
                (!has_right || rows[static_cast<std::size_t>(r) + 1][static_cast<std::size_t>(c)] <
                                   rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) + 1]);
            if (slide_up) {
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    rows[static_cast<std::size_t>(r) + 1][static_cast<std::size_t>(c)];
                ++r;
            } else {
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) + 1];
                ++c;
            }
        }
        out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = n + 1 - step;
        rows[static_cast<std::size_t>(r)].pop_back();
        if (rows[static_cast<std::size_t>(r)].empty()) rows.pop_back();
    }
    return StandardTableau(std::move(out));
}

}  // namespace syt
