#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "syt/matching.hpp"
#include "syt/shadow.hpp"

namespace syt {

struct RenderSpec {
    int width = 640;
    int height = 640;
    std::vector<std::string> palette;  // empty selects the default progression
    bool labels = true;
};

namespace detail {

inline std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline std::vector<std::string> resolve_palette(const RenderSpec& spec, std::size_t levels) {
    static const std::vector<std::string> named = {"red",  "orange", "green",   "blue",
                                                   "purple", "brown", "teal", "magenta"};
    if (!spec.palette.empty()) {
        if (spec.palette.size() < levels)
            throw std::invalid_argument("palette is shorter than the number of skeleton levels");
        return spec.palette;
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < levels; ++i) {
        if (i < named.size()) out.push_back(named[i]);
        else out.push_back("hsl(" + std::to_string((i * 47) % 360) + ",70%,35%)");
    }
    return out;
}

}  // namespace detail

/// Pixel position of boundary node i (1-based) of `count` nodes, placed
/// clockwise starting just east of twelve o'clock.
inline std::pair<double, double> chord_node_position(int i, int count, const RenderSpec& spec = {}) {
    const double cx = spec.width / 2.0, cy = spec.height / 2.0;
    const double radius = std::min(spec.width, spec.height) / 2.0 - 40.0;
    const double theta = (90.0 - (i - 0.5) * 360.0 / count) * std::acos(-1.0) / 180.0;
    return {cx + radius * std::cos(theta), cy - radius * std::sin(theta)};
}

/// Chord diagram: labeled boundary nodes on a circle, one straight chord per
/// block. Output is deterministic for fixed input and spec.
inline std::string render_chord_svg(const PerfectMatching& m, const RenderSpec& spec = {}) {
    const int count = m.ground_size();
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
       << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n";
    os << "<circle cx=\"" << detail::fixed2(spec.width / 2.0) << "\" cy=\"" << detail::fixed2(spec.height / 2.0)
       << "\" r=\"" << detail::fixed2(std::min(spec.width, spec.height) / 2.0 - 40.0)
       << "\" fill=\"none\" stroke=\"lightgray\"/>\n";
    for (const auto& [a, b] : m.blocks()) {
        const auto [x1, y1] = chord_node_position(a, count, spec);
        const auto [x2, y2] = chord_node_position(b, count, spec);
        os << "<line x1=\"" << detail::fixed2(x1) << "\" y1=\"" << detail::fixed2(y1) << "\" x2=\""
           << detail::fixed2(x2) << "\" y2=\"" << detail::fixed2(y2) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    for (int i = 1; i <= count; ++i) {
        const auto [x, y] = chord_node_position(i, count, spec);
        os << "<circle cx=\"" << detail::fixed2(x) << "\" cy=\"" << detail::fixed2(y)
           << "\" r=\"3\" fill=\"black\"/>\n";
        if (spec.labels) {
            const double cx = spec.width / 2.0, cy = spec.height / 2.0;
            const double lx = cx + (x - cx) * 1.12, ly = cy + (y - cy) * 1.12;
            os << "<text x=\"" << detail::fixed2(lx) << "\" y=\"" << detail::fixed2(ly)
               << "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << i << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

/// Shadow lines of every iterated skeleton as orthogonal polylines, colored
/// by skeleton level, with the label words on the two reading edges.
inline std::string render_shadow_svg(const PlanarPointSet& pts, Direction d, const RenderSpec& spec = {}) {
    const ViennotOverlay overlay = viennot_overlay(pts, d);
    std::size_t levels = 0;
    for (const LabeledLine& line : overlay.lines) levels = std::max(levels, static_cast<std::size_t>(line.level) + 1);
    const std::vector<std::string> palette = detail::resolve_palette(spec, levels);

    // original-frame bounds with a one-unit margin, as in the worked figures
    int lox = 0, hix = 1, loy = 0, hiy = 1;
    if (!pts.empty()) {
        lox = hix = pts.points()[0].x;
        loy = hiy = pts.points()[0].y;
        for (const Point& p : pts.points()) {
            lox = std::min(lox, p.x); hix = std::max(hix, p.x);
            loy = std::min(loy, p.y); hiy = std::max(hiy, p.y);
        }
    }
    --lox; ++hix; --loy; ++hiy;
    const double margin = 28.0;
    const double sxf = (spec.width - 2 * margin) / std::max(1, hix - lox);
    const double syf = (spec.height - 2 * margin) / std::max(1, hiy - loy);
    auto sx = [&](double x) { return margin + (x - lox) * sxf; };
    auto sy = [&](double y) { return spec.height - margin - (y - loy) * syf; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
       << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n";
    for (int x = lox + 1; x < hix; ++x)
        os << "<line x1=\"" << detail::fixed2(sx(x)) << "\" y1=\"" << detail::fixed2(sy(loy)) << "\" x2=\""
           << detail::fixed2(sx(x)) << "\" y2=\"" << detail::fixed2(sy(hiy)) << "\" stroke=\"#dddddd\"/>\n";
    for (int y = loy + 1; y < hiy; ++y)
        os << "<line x1=\"" << detail::fixed2(sx(lox)) << "\" y1=\"" << detail::fixed2(sy(y)) << "\" x2=\""
           << detail::fixed2(sx(hix)) << "\" y2=\"" << detail::fixed2(sy(y)) << "\" stroke=\"#dddddd\"/>\n";

    for (const LabeledLine& line : overlay.lines) {
        // rebuild the polyline in the rotated frame, rays clipped to the bounds
        std::vector<Point> frame = detail::rotate_to_ne(line.points, d);
        std::sort(frame.begin(), frame.end());
        Point corner_lo = detail::rotate_to_ne(Point{lox, loy}, d);
        Point corner_hi = detail::rotate_to_ne(Point{hix, hiy}, d);
        const int frame_hix = std::max(corner_lo.x, corner_hi.x);
        const int frame_hiy = std::max(corner_lo.y, corner_hi.y);
        std::vector<Point> verts;
        verts.push_back({frame.front().x, frame_hiy});  // north ray
        for (std::size_t i = 0; i < frame.size(); ++i) {
            verts.push_back(frame[i]);
            if (i + 1 < frame.size()) verts.push_back({frame[i + 1].x, frame[i].y});
        }
        verts.push_back({frame_hix, frame.back().y});  // east ray
        const std::string& color = palette[static_cast<std::size_t>(line.level)];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2.5\" points=\"";
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const Point v = detail::rotate_from_ne(verts[i], d);
            if (i) os << ' ';
            os << detail::fixed2(sx(v.x)) << ',' << detail::fixed2(sy(v.y));
        }
        os << "\"/>\n";
        if (spec.labels) {
            const Point p_end = detail::rotate_from_ne(verts.back(), d);
            const Point q_end = detail::rotate_from_ne(verts.front(), d);
            os << "<text x=\"" << detail::fixed2(sx(p_end.x)) << "\" y=\"" << detail::fixed2(sy(p_end.y))
               << "\" font-size=\"12\" fill=\"" << color << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
               << line.level + 1 << "</text>\n";
            os << "<text x=\"" << detail::fixed2(sx(q_end.x)) << "\" y=\"" << detail::fixed2(sy(q_end.y))
               << "\" font-size=\"12\" fill=\"" << color << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
               << line.level + 1 << "</text>\n";
        }
    }

    for (const LabeledLine& line : overlay.lines) {
        const std::string& color = palette[static_cast<std::size_t>(line.level)];
        for (const Point& p : line.points)
            os << "<circle cx=\"" << detail::fixed2(sx(p.x)) << "\" cy=\"" << detail::fixed2(sy(p.y))
               << "\" r=\"4\" fill=\"" << (line.level == 0 ? color : std::string("white")) << "\" stroke=\"" << color
               << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace syt
