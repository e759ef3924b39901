#pragma once

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "syt/matching.hpp"
#include "syt/perm.hpp"
#include "syt/prom_matrix.hpp"
#include "syt/shadow.hpp"
#include "syt/tableau.hpp"
#include "syt/verify.hpp"

namespace syt {

namespace detail {

inline bool looks_like_json(const std::string& s) {
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            return ch == '{' || ch == '[';
    return false;
}

inline std::vector<int> ints_on_line(const std::string& line) {
    // tolerate brackets and commas from the one-line permutation form
    std::string norm;
    norm.reserve(line.size());
    for (char ch : line)
        norm += (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') ? ch : ' ';
    std::vector<int> out;
    std::istringstream is(norm);
    int v = 0;
    while (is >> v) out.push_back(v);
    return out;
}

inline std::vector<std::vector<int>> int_rows(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::vector<int> row = ints_on_line(line);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detail

// ---- tableaux ----

inline nlohmann::json tableau_to_json(const StandardTableau& t) {
    return nlohmann::json{{"rows", t.rows()}};
}

inline StandardTableau tableau_from_json(const nlohmann::json& j) {
    const nlohmann::json& rows = j.is_object() ? j.at("rows") : j;
    return StandardTableau(rows.get<std::vector<std::vector<int>>>());
}

/// Accepts the line-per-row text format or a {"rows": [[...]]} JSON document.
inline StandardTableau parse_tableau(const std::string& input) {
    if (detail::looks_like_json(input)) return tableau_from_json(nlohmann::json::parse(input));
    return StandardTableau(detail::int_rows(input));
}

/// Two tableaux: JSON {"p": ..., "q": ...} or two text blocks separated by a
/// blank line.
inline std::pair<StandardTableau, StandardTableau> parse_tableau_pair(const std::string& input) {
    if (detail::looks_like_json(input)) {
        const nlohmann::json j = nlohmann::json::parse(input);
        return {tableau_from_json(j.at("p")), tableau_from_json(j.at("q"))};
    }
    std::vector<std::vector<int>> first, second;
    bool past_gap = false;
    std::istringstream is(input);
    std::string line;
    bool seen_first = false;
    while (std::getline(is, line)) {
        std::vector<int> row = detail::ints_on_line(line);
        if (row.empty()) {
            if (seen_first) past_gap = true;
            continue;
        }
        seen_first = true;
        (past_gap ? second : first).push_back(std::move(row));
    }
    if (first.empty() || second.empty())
        throw std::invalid_argument("expected two tableaux separated by a blank line");
    return {StandardTableau(std::move(first)), StandardTableau(std::move(second))};
}

// ---- permutations ----

/// One-line bracket form "[6, 5, 4, 1]", a JSON array, or plain
/// whitespace-separated values; brackets and commas are ignored either way.
inline Permutation parse_permutation(const std::string& input) {
    std::vector<int> all;
    for (const auto& row : detail::int_rows(input))
        all.insert(all.end(), row.begin(), row.end());
    return Permutation(std::move(all));
}

// ---- point sets ----

inline PlanarPointSet parse_points(const std::string& input) {
    std::vector<Point> pts;
    if (detail::looks_like_json(input)) {
        for (const auto& pair : nlohmann::json::parse(input)) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("points JSON must be an array of [x, y] pairs");
            pts.push_back({pair[0].get<int>(), pair[1].get<int>()});
        }
    } else {
        for (const auto& row : detail::int_rows(input)) {
            if (row.size() != 2) throw std::invalid_argument("each point line must hold two integers");
            pts.push_back({row[0], row[1]});
        }
    }
    return PlanarPointSet(std::move(pts));
}

inline nlohmann::json points_to_json(const PlanarPointSet& pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Point& p : pts.points()) arr.push_back({p.x, p.y});
    return arr;
}

inline std::string points_to_text(const PlanarPointSet& pts) {
    std::ostringstream os;
    for (const Point& p : pts.points()) os << p.x << ' ' << p.y << '\n';
    return os.str();
}

// ---- matchings ----

/// "1-19, 2-22, ..." text or a JSON list of pairs.
inline PerfectMatching parse_matching(const std::string& input) {
    std::vector<std::pair<int, int>> blocks;
    if (detail::looks_like_json(input)) {
        for (const auto& pair : nlohmann::json::parse(input)) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("matching JSON must be an array of pairs");
            blocks.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
    } else {
        std::string norm = input;
        std::replace(norm.begin(), norm.end(), ',', ' ');
        std::replace(norm.begin(), norm.end(), '-', ' ');
        std::istringstream is(norm);
        int a = 0, b = 0;
        while (is >> a >> b) blocks.emplace_back(a, b);
    }
    return PerfectMatching(std::move(blocks));
}

inline nlohmann::json matching_to_json(const PerfectMatching& m) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [a, b] : m.blocks()) arr.push_back({a, b});
    return arr;
}

// ---- matrices & reports ----

inline nlohmann::json matrix_to_json(const PromotionMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 1; r <= m.size(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 1; c <= m.size(); ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::json report_to_json(const VerifyReport& rep) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : rep.failures) failures.push_back({{"clause", f.clause}, {"witness", f.witness}});
    return nlohmann::json{{"shape", rep.shape_string()},
                          {"theorem", rep.theorem},
                          {"pairs", rep.checked},
                          {"failures", failures},
                          {"elapsed_ms", rep.elapsed.count()}};
}

}  // namespace syt
