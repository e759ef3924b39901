#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "syt/perm.hpp"
#include "syt/rs.hpp"
#include "syt/tableau.hpp"

namespace syt {

struct Point {
    int x = 0;
    int y = 0;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

/// Corner the light shines toward.
enum class Direction { NE, SE, SW, NW };

inline const char* to_string(Direction d) {
    switch (d) {
        case Direction::NE: return "ne";
        case Direction::SE: return "se";
        case Direction::SW: return "sw";
        case Direction::NW: return "nw";
    }
    return "?";
}

/// Generic point set: all x coordinates distinct, all y coordinates distinct.
/// Stored sorted by x.
class PlanarPointSet {
public:
    PlanarPointSet() = default;

    explicit PlanarPointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
        std::sort(pts_.begin(), pts_.end());
        std::set<int> ys;
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            if (i > 0 && pts_[i].x == pts_[i - 1].x)
                throw std::invalid_argument("point set needs pairwise distinct x coordinates");
            if (!ys.insert(pts_[i].y).second)
                throw std::invalid_argument("point set needs pairwise distinct y coordinates");
        }
    }

    const std::vector<Point>& points() const { return pts_; }
    int size() const { return static_cast<int>(pts_.size()); }
    bool empty() const { return pts_.empty(); }

    friend bool operator==(const PlanarPointSet&, const PlanarPointSet&) = default;

private:
    std::vector<Point> pts_;  // sorted by x
};

/// Ordered minimal-layer decomposition of a point set; lines[j] is the
/// (j+1)-st shadow line, sorted by x.
struct ShadowDecomposition {
    std::vector<std::vector<Point>> lines;
    Direction direction = Direction::NE;
};

namespace detail {

// rotate so that direction d becomes NE
inline Point rotate_to_ne(Point p, Direction d) {
    switch (d) {
        case Direction::NE: return p;
        case Direction::SE: return {-p.y, p.x};   // counterclockwise quarter turn
        case Direction::SW: return {-p.x, -p.y};  // half turn
        case Direction::NW: return {p.y, -p.x};   // clockwise quarter turn
    }
    throw std::logic_error("bad direction");
}

inline Point rotate_from_ne(Point p, Direction d) {
    switch (d) {
        case Direction::NE: return p;
        case Direction::SE: return {p.y, -p.x};
        case Direction::SW: return {-p.x, -p.y};
        case Direction::NW: return {-p.y, p.x};
    }
    throw std::logic_error("bad direction");
}

inline std::vector<Point> rotate_to_ne(const std::vector<Point>& pts, Direction d) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (Point p : pts) out.push_back(rotate_to_ne(p, d));
    return out;
}

// Peel successive sets of minimal elements under the componentwise order.
// Each returned line is sorted by x ascending (so y strictly descends).
inline std::vector<std::vector<Point>> ne_shadow_lines(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<std::vector<Point>> lines;
    while (!pts.empty()) {
        std::vector<Point> minimal, rest;
        for (const Point& p : pts) {
            bool dominated = false;
            for (const Point& q : pts)
                if (q.x < p.x && q.y < p.y) { dominated = true; break; }
            (dominated ? rest : minimal).push_back(p);
        }
        lines.push_back(std::move(minimal));
        pts = std::move(rest);
    }
    return lines;
}

// Skeleton of one NE shadow line: the inner corners between consecutive
// points, (x_{k+1}, y_k) for the line sorted by x.
inline void ne_line_skeleton(const std::vector<Point>& line, std::vector<Point>& out) {
    for (std::size_t i = 0; i + 1 < line.size(); ++i) out.push_back({line[i + 1].x, line[i].y});
}

}  // namespace detail

/// Shadow line decomposition with light shining toward d.
inline ShadowDecomposition shadow_lines(const PlanarPointSet& pts, Direction d) {
    ShadowDecomposition dec;
    dec.direction = d;
    for (auto& line : detail::ne_shadow_lines(detail::rotate_to_ne(pts.points(), d))) {
        std::vector<Point> back;
        back.reserve(line.size());
        for (Point p : line) back.push_back(detail::rotate_from_ne(p, d));
        std::sort(back.begin(), back.end());
        dec.lines.push_back(std::move(back));
    }
    return dec;
}

/// Union of the per-line skeleta: the points covered by two shadows, one line
/// at a time.
inline PlanarPointSet skeleton(const PlanarPointSet& pts, Direction d) {
    std::vector<Point> out;
    for (const auto& line : detail::ne_shadow_lines(detail::rotate_to_ne(pts.points(), d)))
        detail::ne_line_skeleton(line, out);
    for (Point& p : out) p = detail::rotate_from_ne(p, d);
    return PlanarPointSet(std::move(out));
}

/// One labeled shadow line of some iterated skeleton, in the rotated (NE)
/// frame together with its original-frame points.
struct LabeledLine {
    int level = 0;                 // 0-based skeleton index; label = level + 1
    std::vector<Point> points;     // original frame, sorted by x
    Point exit_primary;            // NE frame: east-ray exit (max x bound later), key = min y
    Point exit_secondary;          // NE frame: north-ray exit, key = min x
};

/// All shadow lines of all iterated skeleta, labeled by skeleton index.
struct ViennotOverlay {
    Direction direction = Direction::NE;
    std::vector<LabeledLine> lines;
    std::vector<PlanarPointSet> skeleta;  // skeleta[k] = k-th iterated skeleton, original frame
    LatticeWord word_p;                   // labels along the primary reading edge
    LatticeWord word_q;                   // labels along the secondary reading edge
};

/// Compute every iterated skeleton and its shadow lines, plus the two label
/// words. The words are read in the rotated NE frame: east exits bottom-to-top
/// for P, north exits left-to-right for Q, which reproduces the per-direction
/// edge readings.
inline ViennotOverlay viennot_overlay(const PlanarPointSet& pts, Direction d) {
    ViennotOverlay overlay;
    overlay.direction = d;
    std::vector<Point> cur = detail::rotate_to_ne(pts.points(), d);
    std::vector<std::pair<int, int>> p_exits, q_exits;  // (coordinate key, label)
    int level = 0;
    overlay.skeleta.push_back(pts);
    while (!cur.empty()) {
        std::vector<Point> next;
        for (auto& line : detail::ne_shadow_lines(cur)) {
            LabeledLine ll;
            ll.level = level;
            ll.exit_secondary = line.front();  // min x: north ray
            ll.exit_primary = line.back();     // min y: east ray
            p_exits.emplace_back(ll.exit_primary.y, level + 1);
            q_exits.emplace_back(ll.exit_secondary.x, level + 1);
            for (Point p : line) ll.points.push_back(detail::rotate_from_ne(p, d));
            std::sort(ll.points.begin(), ll.points.end());
            overlay.lines.push_back(std::move(ll));
            detail::ne_line_skeleton(line, next);
        }
        cur = std::move(next);
        ++level;
        if (!cur.empty()) {
            std::vector<Point> orig;
            orig.reserve(cur.size());
            for (Point p : cur) orig.push_back(detail::rotate_from_ne(p, d));
            overlay.skeleta.emplace_back(std::move(orig));
        }
    }
    auto read = [](std::vector<std::pair<int, int>>& exits) {
        std::sort(exits.begin(), exits.end());
        LatticeWord w;
        w.reserve(exits.size());
        for (std::size_t i = 0; i < exits.size(); ++i) {
            if (i > 0 && exits[i].first == exits[i - 1].first)
                throw std::logic_error("shadow lines exit at a shared coordinate");
            w.push_back(exits[i].second);
        }
        return w;
    };
    overlay.word_p = read(p_exits);
    overlay.word_q = read(q_exits);
    return overlay;
}

/// Viennot's construction: the tableau pair encoded by the edge label words.
inline RSPair viennot(const PlanarPointSet& pts, Direction d) {
    ViennotOverlay overlay = viennot_overlay(pts, d);
    return {tableau_from_lattice_word(overlay.word_p), tableau_from_lattice_word(overlay.word_q)};
}

/// Point set {(i, rho(i))} of a permutation.
inline PlanarPointSet points_from_permutation(const Permutation& rho) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(rho.size()));
    for (int i = 1; i <= rho.size(); ++i) pts.push_back({i, rho(i)});
    return PlanarPointSet(std::move(pts));
}

/// Cartesian points of the northeast block of the permutation matrix of rho
/// in S_{2n}: for each j <= n with rho(j) > n, the point (rho(j)-n, n+1-j).
inline PlanarPointSet ne_block_points(const Permutation& rho) {
    if (rho.size() % 2 != 0) throw std::invalid_argument("ne_block_points needs an even-sized permutation");
    const int n = rho.size() / 2;
    std::vector<Point> pts;
    for (int j = 1; j <= n; ++j)
        if (rho(j) > n) pts.push_back({rho(j) - n, n + 1 - j});
    return PlanarPointSet(std::move(pts));
}

}  // namespace syt
