#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace syt {

/// Integer partition: weakly decreasing positive parts, trailing zeros stripped.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    static Partition rectangle(int rows, int cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative rectangle");
        if (rows == 0 || cols == 0) return Partition{};
        return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
    }

    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Part in row i (0-based); 0 past the end.
    int part(int i) const {
        return (i >= 0 && i < rows()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }
    int operator[](int i) const { return part(i); }

    int cells() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const {
        if (parts_.empty()) return {};
        std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) conj[static_cast<std::size_t>(j)]++;
        return Partition(std::move(conj));
    }

    bool contains(const Partition& other) const {
        for (int i = 0; i < other.rows(); ++i)
            if (part(i) < other.part(i)) return false;
        return true;
    }

    /// Partition with one cell appended to row i (0-based). Throws if invalid.
    Partition add_cell(int row) const {
        if (row < 0 || row > rows()) throw std::invalid_argument("add_cell: bad row");
        std::vector<int> p = parts_;
        if (row == rows()) p.push_back(1);
        else p[static_cast<std::size_t>(row)]++;
        return Partition(std::move(p));
    }

    /// If `bigger` is this partition plus exactly one cell, the 0-based row of
    /// that cell; -1 otherwise.
    int cover_row(const Partition& bigger) const {
        if (bigger.cells() != cells() + 1) return -1;
        int row = -1;
        for (int i = 0; i < std::max(rows(), bigger.rows()); ++i) {
            int d = bigger.part(i) - part(i);
            if (d == 0) continue;
            if (d != 1 || row != -1) return -1;
            row = i;
        }
        return row;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

struct RectShape {
    int rows = 0;
    int cols = 0;
    int cells() const { return rows * cols; }
    Partition partition() const { return Partition::rectangle(rows, cols); }
};

/// Columnwise stacking of two partitions: conjugate, add pointwise, conjugate back.
inline Partition vertical_sum(const Partition& a, const Partition& b) {
    const Partition ca = a.conjugate(), cb = b.conjugate();
    std::vector<int> sum(static_cast<std::size_t>(std::max(ca.rows(), cb.rows())), 0);
    for (int i = 0; i < static_cast<int>(sum.size()); ++i)
        sum[static_cast<std::size_t>(i)] = ca.part(i) + cb.part(i);
    return Partition(std::move(sum)).conjugate();
}

}  // namespace syt
