#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "syt/matching.hpp"
#include "syt/prom_perms.hpp"
#include "syt/rs.hpp"
#include "syt/shadow.hpp"
#include "syt/tableau.hpp"

namespace syt {

struct VerifyOptions {
    std::int64_t max_pairs = 250000;  // cap on (P, Q) sweeps
    int max_double_n = 16;            // cap on 2n for involution enumeration
    int cell_cap = 30;                // cap on enumeration cell count
    std::int64_t sample = 0;          // > 0: check this many random pairs instead of all
    unsigned seed = 0;                // RNG seed for sampling
};

struct VerifyFailure {
    std::string clause;
    std::string witness;
};

struct VerifyReport {
    int rows = 0;
    int cols = 0;
    std::string theorem;
    std::int64_t checked = 0;  // pairs or objects, depending on the sweep
    std::vector<VerifyFailure> failures;
    std::chrono::milliseconds elapsed{0};

    bool passed() const { return failures.empty(); }

    std::string shape_string() const { return std::to_string(rows) + "x" + std::to_string(cols); }

    std::string to_text() const {
        std::ostringstream os;
        os << theorem << " on " << shape_string() << ": " << checked << (theorem == "cor" ? " objects" : " pairs")
           << ", " << failures.size() << " failures (" << elapsed.count() << " ms)";
        for (std::size_t i = 0; i < failures.size() && i < 10; ++i)
            os << "\n  [" << failures[i].clause << "] " << failures[i].witness;
        if (failures.size() > 10) os << "\n  ... " << failures.size() - 10 << " more";
        return os.str();
    }
};

namespace detail {

inline std::string pair_witness(const StandardTableau& p, const StandardTableau& q) {
    return "P=" + p.to_string() + " | Q=" + q.to_string();
}

template <typename Fn>
inline VerifyReport pair_sweep(int r, int c, const char* theorem, const VerifyOptions& opt, Fn&& per_pair) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.rows = r;
    rep.cols = c;
    rep.theorem = theorem;
    const Partition shape = Partition::rectangle(r, c);
    const std::uint64_t count = hook_count(shape);
    if (opt.sample <= 0 && count != 0 && count > static_cast<std::uint64_t>(opt.max_pairs) / count)
        throw std::invalid_argument("pair sweep exceeds the configured cap");
    const std::vector<StandardTableau> all = enumerate_syt(shape, opt.cell_cap);
    if (opt.sample > 0) {
        std::mt19937 rng(opt.seed);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (std::int64_t i = 0; i < opt.sample; ++i) {
            per_pair(all[pick(rng)], all[pick(rng)], rep);
            rep.checked++;
        }
    } else {
        for (const StandardTableau& p : all)
            for (const StandardTableau& q : all) {
                per_pair(p, q, rep);
                rep.checked++;
            }
    }
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    return rep;
}

}  // namespace detail

/// prom_r^NE(stack(P, Q)) = RS^{-1}(Q^T, P^T) over the full square of pairs.
inline VerifyReport verify_thm_prom_rs(int r, int c, const VerifyOptions& opt = {}) {
    return detail::pair_sweep(r, c, "prom-rs", opt, [&](const StandardTableau& p, const StandardTableau& q, VerifyReport& rep) {
        const std::vector<int> got = prom_ne(stack(p, q), r);
        const Permutation expect = rs_inverse(transpose(q), transpose(p));
        if (got != expect.one_line())
            rep.failures.push_back({"prom-rs", detail::pair_witness(p, q)});
    });
}

/// The full shadow-line description of the stacked promotion matrix:
///   (i)   Viennot on the NE block of prom_r reads (evacuate(P), Q);
///   (ii)  NE blocks of prom_{r±k} are the iterated NE/SW skeleta;
///   (iii) per-line refinement between consecutive skeleta;
///   (iv)  NW/SE quadrants: triangle entry bounds, NW depends only on P and
///         SE only on Q.
inline VerifyReport verify_thm_main(int r, int c, const VerifyOptions& opt = {}) {
    std::map<std::string, PromotionMatrix> nw_by_p, se_by_q;
    return detail::pair_sweep(r, c, "main", opt, [&](const StandardTableau& p, const StandardTableau& q, VerifyReport& rep) {
        const StandardTableau s = stack(p, q);
        const PromTuple perms = prom_perms(s);
        const PlanarPointSet base = ne_block_points(perms.prom(r));
        auto fail = [&](const char* clause) { rep.failures.push_back({clause, detail::pair_witness(p, q)}); };

        // (i)
        const RSPair v = viennot(base, Direction::NE);
        if (v.p != evacuate(p) || v.q != q) fail("main-i-viennot");

        // (ii) + (iii)
        PlanarPointSet ne_cur = base, sw_cur = base;
        for (int k = 0; k <= r - 1; ++k) {
            if (ne_block_points(perms.prom(r + k)) != ne_cur) fail("main-ii-ne-skeleton");
            if (ne_block_points(perms.prom(r - k)) != sw_cur) fail("main-ii-sw-skeleton");
            for (Direction d : {Direction::NE, Direction::SW}) {
                const PlanarPointSet& cur = d == Direction::NE ? ne_cur : sw_cur;
                const ShadowDecomposition lines = shadow_lines(cur, d);
                const ShadowDecomposition next_lines = shadow_lines(skeleton(cur, d), d);
                for (std::size_t j = 0; j < lines.lines.size(); ++j) {
                    const PlanarPointSet line_skel = skeleton(PlanarPointSet(lines.lines[j]), d);
                    const std::vector<Point> expect =
                        j < next_lines.lines.size() ? next_lines.lines[j] : std::vector<Point>{};
                    if (line_skel.points() != expect) fail("main-iii-refinement");
                }
            }
            ne_cur = skeleton(ne_cur, Direction::NE);
            sw_cur = skeleton(sw_cur, Direction::SW);
        }
        if (!ne_cur.empty() || !sw_cur.empty()) fail("main-ii-skeleta-exhausted");

        // (iv)
        const PromotionMatrix pm = promotion_matrix(perms, s.size());
        const PromotionMatrix nw = pm.block(PromotionMatrix::Quadrant::NW);
        const PromotionMatrix se = pm.block(PromotionMatrix::Quadrant::SE);
        for (const PromotionMatrix* blockp : {&nw, &se})
            for (int a = 1; a <= blockp->size(); ++a)
                for (int b = 1; b <= blockp->size(); ++b) {
                    const int v2 = blockp->at(a, b);
                    if (v2 == 0) continue;
                    if (a < b && v2 >= r) fail("main-iv-triangle");
                    if (a > b && v2 <= r) fail("main-iv-triangle");
                    if (a == b) fail("main-iv-triangle");
                }
        auto check_block = [&](std::map<std::string, PromotionMatrix>& store, const std::string& key,
                               const PromotionMatrix& block, const char* clause) {
            auto [it, inserted] = store.emplace(key, block);
            if (!inserted && it->second != block) fail(clause);
        };
        check_block(nw_by_p, p.to_string(), nw, "main-iv-nw-depends-on-p");
        check_block(se_by_q, q.to_string(), se, "main-iv-se-depends-on-q");
    });
}

/// Image characterization: prom_r of a stacked tableau is a fixed-point free
/// involution pairing {1..n} with {n+1..2n}, with crossing number r and
/// nesting number c; the map is injective; and the number of such involutions
/// equals |SYT(r x c)|^2 (full n! enumeration).
inline VerifyReport verify_cor_image(int r, int c, const VerifyOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.rows = r;
    rep.cols = c;
    rep.theorem = "cor";
    const int n = r * c;
    if (2 * n > opt.max_double_n) throw std::invalid_argument("involution enumeration exceeds the configured cap");

    const Partition shape = Partition::rectangle(r, c);
    const std::vector<StandardTableau> all = enumerate_syt(shape, opt.cell_cap);
    std::set<std::vector<int>> images;
    for (const StandardTableau& p : all)
        for (const StandardTableau& q : all) {
            const StandardTableau s = stack(p, q);
            const Permutation rho = prom_perms(s).prom(r);
            rep.checked++;
            const std::string witness = detail::pair_witness(p, q);
            if (!rho.is_involution() || !rho.is_fixed_point_free()) {
                rep.failures.push_back({"cor-involution", witness});
                continue;
            }
            bool bipartite = true;
            for (int j = 1; j <= n; ++j)
                if (rho(j) <= n) bipartite = false;
            if (!bipartite) {
                rep.failures.push_back({"cor-bipartite", witness});
                continue;
            }
            const PerfectMatching m = matching_from_involution(rho);
            if (crossing_number(m) != r || nesting_number(m) != c)
                rep.failures.push_back({"cor-statistics", witness});
            if (!images.insert(rho.one_line()).second)
                rep.failures.push_back({"cor-injective", witness});
        }

    // backward count over all n! bipartite fixed-point free involutions
    std::vector<int> closers(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) closers[static_cast<std::size_t>(j)] = n + 1 + j;
    std::int64_t hits = 0;
    do {
        std::vector<std::pair<int, int>> blocks;
        blocks.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) blocks.emplace_back(j + 1, closers[static_cast<std::size_t>(j)]);
        const PerfectMatching m{std::move(blocks)};
        rep.checked++;
        if (crossing_number(m) == r && nesting_number(m) == c) hits++;
    } while (std::next_permutation(closers.begin(), closers.end()));
    const std::int64_t expected = static_cast<std::int64_t>(hook_count(shape)) * static_cast<std::int64_t>(hook_count(shape));
    if (hits != expected)
        rep.failures.push_back({"cor-count", "expected " + std::to_string(expected) + ", found " + std::to_string(hits)});

    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    return rep;
}

}  // namespace syt
