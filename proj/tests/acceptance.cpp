// Acceptance suite: one line of output per criterion, nonzero exit when any
// criterion fails. `--extended` additionally runs the 462^2-pair sweeps.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "syt/growth.hpp"
#include "syt/io.hpp"
#include "syt/jdt.hpp"
#include "syt/matching.hpp"
#include "syt/prom_perms.hpp"
#include "syt/rs.hpp"
#include "syt/shadow.hpp"
#include "syt/svg.hpp"
#include "syt/tableau.hpp"
#include "syt/verify.hpp"

using namespace syt;

namespace {

int failures = 0;

void criterion(const std::string& id, double limit_ms, const std::function<bool(std::string&)>& body) {
    std::string note;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (ms > limit_ms) {
        ok = false;
        if (!note.empty()) note += "; ";
        note += "over time budget";
    }
    std::printf("[%s] %s (%.1f ms <= %.0f ms)%s%s\n", ok ? "PASS" : "FAIL", id.c_str(), ms, limit_ms,
                note.empty() ? "" : " -- ", note.c_str());
    if (!ok) ++failures;
}

StandardTableau t(std::vector<std::vector<int>> rows) { return StandardTableau(std::move(rows)); }

const StandardTableau kP = t({{1, 3, 5, 6}, {2, 7, 9, 11}, {4, 8, 10, 12}});
const StandardTableau kQ = t({{1, 2, 3, 7}, {4, 5, 6, 10}, {8, 9, 11, 12}});
const StandardTableau kT32 = t({{1, 3}, {2, 5}, {4, 6}});

PlanarPointSet pts(std::vector<Point> v) { return PlanarPointSet(std::move(v)); }

int crossing_subset_oracle(const PerfectMatching& match) {
    const auto& blocks = match.blocks();
    const int n = match.block_count();
    int best = 0;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<std::pair<int, int>> sel;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) sel.push_back(blocks[static_cast<std::size_t>(i)]);
        bool ok = true;
        for (std::size_t i = 0; ok && i + 1 < sel.size(); ++i)
            if (sel[i].first >= sel[i + 1].first || sel[i].second >= sel[i + 1].second) ok = false;
        if (ok && !sel.empty() && sel.back().first >= sel.front().second) ok = false;
        if (ok) best = std::max(best, static_cast<int>(sel.size()));
    }
    return best;
}

int nesting_subset_oracle(const PerfectMatching& match) {
    const auto& blocks = match.blocks();
    const int n = match.block_count();
    int best = 0;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<std::pair<int, int>> sel;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) sel.push_back(blocks[static_cast<std::size_t>(i)]);
        bool ok = true;
        for (std::size_t i = 0; ok && i + 1 < sel.size(); ++i)
            if (!(sel[i].first < sel[i + 1].first && sel[i + 1].second < sel[i].second)) ok = false;
        if (ok) best = std::max(best, static_cast<int>(sel.size()));
    }
    return best;
}

void for_each_matching(int blocks, const std::function<void(const PerfectMatching&)>& fn) {
    std::vector<std::pair<int, int>> cur;
    std::vector<bool> used(static_cast<std::size_t>(2 * blocks) + 1, false);
    auto rec = [&](auto&& self) -> void {
        int a = 0;
        for (int i = 1; i <= 2 * blocks; ++i)
            if (!used[static_cast<std::size_t>(i)]) { a = i; break; }
        if (a == 0) {
            fn(PerfectMatching(cur));
            return;
        }
        used[static_cast<std::size_t>(a)] = true;
        for (int b = a + 1; b <= 2 * blocks; ++b) {
            if (used[static_cast<std::size_t>(b)]) continue;
            used[static_cast<std::size_t>(b)] = true;
            cur.emplace_back(a, b);
            self(self);
            cur.pop_back();
            used[static_cast<std::size_t>(b)] = false;
        }
        used[static_cast<std::size_t>(a)] = false;
    };
    rec(rec);
}

}  // namespace

int main(int argc, char** argv) {
    bool extended = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--extended") extended = true;

    criterion("C1 promotion/evacuation/gromotion fixtures", 10.0, [](std::string& note) {
        bool ok = true;
        ok &= promote(kQ) == t({{1, 2, 5, 6}, {3, 4, 9, 11}, {7, 8, 10, 12}});
        ok &= evacuate(kQ) == t({{1, 2, 4, 5}, {3, 7, 8, 9}, {6, 10, 11, 12}});
        const GromoteResult g1 = gromote(ShiftedTableau(kQ));
        ok &= g1.tableau == ShiftedTableau({{2, 3, 6, 7}, {4, 5, 10, 12}, {8, 9, 11, 13}}, 1);
        ok &= gromote(g1.tableau).tableau == ShiftedTableau({{3, 5, 6, 7}, {4, 9, 10, 12}, {8, 11, 13, 14}}, 2);
        if (!ok) note = "printed tableau mismatch";
        return ok;
    });

    criterion("C2 promotion permutation fixtures", 10.0, [](std::string& note) {
        const PromTuple q_tuple = prom_perms(kQ);
        const PromTuple s_tuple = prom_perms(kT32);
        bool ok = true;
        ok &= q_tuple.prom(1).one_line() == std::vector<int>{6, 5, 4, 12, 10, 9, 8, 3, 2, 11, 7, 1};
        ok &= q_tuple.prom(2).one_line() == std::vector<int>{12, 9, 8, 3, 2, 1, 11, 7, 6, 5, 10, 4};
        ok &= s_tuple.prom(1).one_line() == std::vector<int>{2, 5, 4, 1, 6, 3};
        ok &= s_tuple.prom(2).one_line() == std::vector<int>{4, 1, 6, 3, 2, 5};
        if (!ok) note = "one-line permutation mismatch";
        return ok;
    });

    criterion("C3 promotion matrix fixture and dual construction", 10.0, [](std::string& note) {
        PromotionMatrix expect(6);
        const int rows[6][6] = {{0, 1, 0, 2, 0, 0}, {2, 0, 0, 0, 1, 0}, {0, 0, 0, 1, 0, 2},
                                {1, 0, 2, 0, 0, 0}, {0, 2, 0, 0, 0, 1}, {0, 0, 1, 0, 2, 0}};
        for (int r = 1; r <= 6; ++r)
            for (int c = 1; c <= 6; ++c) expect.at(r, c) = rows[r - 1][c - 1];
        const bool ok = promotion_matrix(kT32) == expect && promotion_matrix_from_diagram(kT32) == expect;
        if (!ok) note = "matrix mismatch";
        return ok;
    });

    criterion("C4 stacked permutation and insertion fixture", 50.0, [](std::string& note) {
        const StandardTableau s = stack(kP, kQ);
        bool ok = prom_perms(s).prom(3).one_line() ==
                  std::vector<int>{19, 22, 15, 24, 14, 13, 18, 23, 17, 21, 16, 20,
                                   6,  5,  3,  11, 9,  7,  1,  12, 10, 2,  8,  4};
        const std::vector<int> word = prom_ne(s, 3);
        ok &= word == std::vector<int>{7, 10, 3, 12, 2, 1, 6, 11, 5, 9, 4, 8};
        const RSPair pair = rs_insert(word);
        ok &= pair.p == transpose(kQ) && pair.q == transpose(kP);
        if (!ok) note = "stacked fixture mismatch";
        return ok;
    });

    criterion("C5 full 24x24 promotion matrix and block point groups", 100.0, [](std::string& note) {
        const StandardTableau s = stack(kP, kQ);
        const PromTuple perms = prom_perms(s);
        const PromotionMatrix pm = promotion_matrix(perms, 24);

        std::ifstream golden(std::string(SYT_TEST_DATA_DIR) + "/pm_stack_3x4.txt");
        if (!golden) {
            note = "golden file missing";
            return false;
        }
        for (int r = 1; r <= 24; ++r)
            for (int c = 1; c <= 24; ++c) {
                int v = -1;
                golden >> v;
                if (pm.at(r, c) != v) {
                    note = "entry (" + std::to_string(r) + "," + std::to_string(c) + ") differs";
                    return false;
                }
            }

        const PlanarPointSet level3 = ne_block_points(perms.prom(3));
        const PlanarPointSet level4 = ne_block_points(perms.prom(4));
        const PlanarPointSet level5 = ne_block_points(perms.prom(5));
        bool ok = level3 == pts({{1, 7}, {4, 2}, {8, 1}, {2, 8}, {5, 4}, {9, 3},
                                 {3, 10}, {6, 6}, {11, 5}, {7, 12}, {10, 11}, {12, 9}});
        ok &= level4 == pts({{4, 7}, {8, 2}, {5, 8}, {9, 4}, {6, 10}, {11, 6}, {10, 12}, {12, 11}});
        ok &= level5 == pts({{8, 7}, {9, 8}, {11, 10}, {12, 12}});
        ok &= level4 == skeleton(level3, Direction::NE);
        ok &= level5 == skeleton(level4, Direction::NE);

        const PlanarPointSet level2 = ne_block_points(perms.prom(2));
        const PlanarPointSet level1 = ne_block_points(perms.prom(1));
        ok &= level2 == skeleton(level3, Direction::SW);
        ok &= level1 == skeleton(level2, Direction::SW);
        ok &= level2 == pts({{7, 11}, {10, 9}, {3, 6}, {6, 5}, {2, 4}, {5, 3}, {1, 2}, {4, 1}});
        ok &= level1 == pts({{7, 9}, {3, 5}, {2, 3}, {1, 1}});
        if (!ok && note.empty()) note = "block point groups mismatch";
        return ok;
    });

    criterion("C6 crossing and nesting of the stacked matching", 10.0, [](std::string& note) {
        const PerfectMatching m = matching_from_involution(prom_perms(stack(kP, kQ)).prom(3));
        const bool ok = crossing_number(m) == 3 && nesting_number(m) == 4;
        if (!ok) note = "statistics mismatch";
        return ok;
    });

    criterion("C7 shadow line pipeline", 10.0, [](std::string& note) {
        const Permutation rho({6, 2, 4, 5, 3, 1, 7});
        const PlanarPointSet set = points_from_permutation(rho);
        const ShadowDecomposition dec = shadow_lines(set, Direction::NE);
        bool ok = dec.lines.size() == 4;
        ok &= ok && dec.lines[0] == std::vector<Point>{{1, 6}, {2, 2}, {6, 1}};
        ok &= ok && dec.lines[1] == std::vector<Point>{{3, 4}, {5, 3}};
        ok &= ok && dec.lines[2] == std::vector<Point>{{4, 5}};
        ok &= ok && dec.lines[3] == std::vector<Point>{{7, 7}};
        const PlanarPointSet s1 = skeleton(set, Direction::NE);
        const PlanarPointSet s2 = skeleton(s1, Direction::NE);
        const PlanarPointSet s3 = skeleton(s2, Direction::NE);
        ok &= s1 == pts({{2, 6}, {5, 4}, {6, 2}});
        ok &= s2 == pts({{5, 6}, {6, 4}});
        ok &= s3 == pts({{6, 6}});
        const ViennotOverlay overlay = viennot_overlay(set, Direction::NE);
        ok &= overlay.word_p == LatticeWord{1, 2, 1, 3, 1, 4, 1};
        ok &= overlay.word_q == LatticeWord{1, 2, 1, 1, 3, 4, 1};
        const RSPair geometric = viennot(set, Direction::NE);
        const RSPair direct = rs_insert(rho);
        ok &= geometric.p == direct.p && geometric.q == direct.q;
        if (!ok) note = "pipeline mismatch";
        return ok;
    });

    criterion("C8 exhaustive theorem sweeps on the default shapes", 60000.0, [](std::string& note) {
        const std::vector<std::pair<int, int>> shapes = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 2},
                                                         {2, 3}, {3, 2}, {2, 4}, {4, 2}, {3, 3}};
        for (auto [r, c] : shapes) {
            const VerifyReport a = verify_thm_prom_rs(r, c);
            const VerifyReport b = verify_thm_main(r, c);
            if (!a.passed() || !b.passed()) {
                note = "failures at " + a.shape_string();
                return false;
            }
        }
        return true;
    });

    if (extended) {
        criterion("C8x extended sweeps at 3x4 and 4x3", 1800000.0, [](std::string& note) {
            for (auto [r, c] : {std::pair{3, 4}, {4, 3}}) {
                const VerifyReport a = verify_thm_prom_rs(r, c);
                const VerifyReport b = verify_thm_main(r, c);
                if (!a.passed() || !b.passed()) {
                    note = "failures at " + a.shape_string();
                    return false;
                }
            }
            return true;
        });
    }

    criterion("C9 image characterization for rc <= 8", 120000.0, [](std::string& note) {
        for (int r = 1; r <= 8; ++r)
            for (int c = 1; r * c <= 8; ++c) {
                const VerifyReport rep = verify_cor_image(r, c);
                if (!rep.passed()) {
                    note = "failures at " + rep.shape_string();
                    return false;
                }
            }
        return true;
    });

    criterion("C10 property suites", 120000.0, [](std::string& note) {
        // dihedral relations and symmetry clauses, exhaustive to 12 cells
        for (int r = 1; r <= 12; ++r)
            for (int c = 1; r * c <= 12; ++c) {
                const int n = r * c;
                bool ok = true;
                for_each_syt(Partition::rectangle(r, c), [&](const StandardTableau& x) {
                    ok &= promote_power(x, n) == x;
                    ok &= evacuate(evacuate(x)) == x;
                    ok &= evacuate(promote(evacuate(x))) == promote_power(x, n - 1);
                    ok &= verify_dihedral(x).all();
                });
                if (!ok) {
                    note = "dihedral failure at " + std::to_string(r) + "x" + std::to_string(c);
                    return false;
                }
            }

        // four-way direction symmetries on 1000 random permutations
        std::mt19937 rng(2024);
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 12);
            std::vector<int> v(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
            std::shuffle(v.begin(), v.end(), rng);
            const PlanarPointSet set = points_from_permutation(Permutation(v));
            const auto [p, q] = viennot(set, Direction::NE);
            const RSPair se = viennot(set, Direction::SE);
            const RSPair sw = viennot(set, Direction::SW);
            const RSPair nw = viennot(set, Direction::NW);
            if (!(se.p == transpose(q) && se.q == transpose(evacuate(p)) && sw.p == evacuate(p) &&
                  sw.q == evacuate(q) && nw.p == transpose(evacuate(q)) && nw.q == transpose(p))) {
                note = "direction symmetry failure";
                return false;
            }
        }

        // crossing/nesting DP against the subset oracle, all matchings to 10 points
        for (int blocks = 1; blocks <= 5; ++blocks) {
            bool ok = true;
            for_each_matching(blocks, [&](const PerfectMatching& m) {
                ok &= crossing_number(m) == crossing_subset_oracle(m);
                ok &= nesting_number(m) == nesting_subset_oracle(m);
            });
            if (!ok) {
                note = "dp mismatch at " + std::to_string(2 * blocks) + " points";
                return false;
            }
        }
        return true;
    });

    criterion("C11 rendering determinism", 10000.0, [](std::string& note) {
        const PerfectMatching m = matching_from_involution(prom_perms(stack(kP, kQ)).prom(3));
        const PlanarPointSet set = points_from_permutation(Permutation({6, 2, 4, 5, 3, 1, 7}));
        const bool ok = render_chord_svg(m) == render_chord_svg(m) &&
                        render_shadow_svg(set, Direction::NE) == render_shadow_svg(set, Direction::NE);
        if (!ok) note = "outputs differ between runs";
        return ok;
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
