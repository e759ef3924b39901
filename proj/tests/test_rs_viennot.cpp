#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "syt/jdt.hpp"
#include "syt/prom_perms.hpp"
#include "syt/rs.hpp"
#include "syt/shadow.hpp"

using namespace syt;

namespace {

StandardTableau t(std::vector<std::vector<int>> rows) { return StandardTableau(std::move(rows)); }

PlanarPointSet pts(std::vector<Point> v) { return PlanarPointSet(std::move(v)); }

const PlanarPointSet kSample7 = pts({{1, 6}, {2, 2}, {3, 4}, {4, 5}, {5, 3}, {6, 1}, {7, 7}});

// skeleton of one shadow line straight from the definition: minimal elements
// of the region covered by at least two of the line's shadows
std::vector<Point> skeleton_region_oracle(const std::vector<Point>& line) {
    if (line.size() < 2) return {};
    int lox = line[0].x, hix = line[0].x, loy = line[0].y, hiy = line[0].y;
    for (const Point& p : line) {
        lox = std::min(lox, p.x); hix = std::max(hix, p.x);
        loy = std::min(loy, p.y); hiy = std::max(hiy, p.y);
    }
    std::vector<Point> region;
    for (int x = lox; x <= hix; ++x)
        for (int y = loy; y <= hiy; ++y) {
            int shadows = 0;
            for (const Point& p : line)
                if (p.x <= x && p.y <= y) ++shadows;
            if (shadows >= 2) region.push_back({x, y});
        }
    std::vector<Point> minimal;
    for (const Point& p : region) {
        bool dominated = false;
        for (const Point& q : region)
            if (q != p && q.x <= p.x && q.y <= p.y) { dominated = true; break; }
        if (!dominated) minimal.push_back(p);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

Permutation random_perm(int n, std::mt19937& rng) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(std::move(v));
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    do {
        fn(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace

TEST_CASE("row insertion fixtures") {
    const RSPair pair = rs_insert({6, 2, 4, 5, 3, 1, 7});
    CHECK(pair.p == t({{1, 3, 5, 7}, {2}, {4}, {6}}));
    CHECK(pair.q == t({{1, 3, 4, 7}, {2}, {5}, {6}}));

    const RSPair row = rs_insert({1, 2, 3, 4});
    CHECK(row.p == t({{1, 2, 3, 4}}));
    CHECK(row.q == t({{1, 2, 3, 4}}));

    const StandardTableau p = t({{1, 3, 5, 6}, {2, 7, 9, 11}, {4, 8, 10, 12}});
    const StandardTableau q = t({{1, 2, 3, 7}, {4, 5, 6, 10}, {8, 9, 11, 12}});
    const RSPair ex12 = rs_insert({7, 10, 3, 12, 2, 1, 6, 11, 5, 9, 4, 8});
    CHECK(ex12.p == transpose(q));
    CHECK(ex12.q == transpose(p));

    CHECK_THROWS_AS(rs_insert({1, 2, 1}), std::invalid_argument);
}

TEST_CASE("inverse insertion") {
    const StandardTableau p = t({{1, 3, 5, 6}, {2, 7, 9, 11}, {4, 8, 10, 12}});
    const StandardTableau q = t({{1, 2, 3, 7}, {4, 5, 6, 10}, {8, 9, 11, 12}});
    CHECK(rs_inverse(transpose(q), transpose(p)).one_line() ==
          std::vector<int>{7, 10, 3, 12, 2, 1, 6, 11, 5, 9, 4, 8});
    CHECK(rs_inverse(t({{1, 2, 3}}), t({{1, 2, 3}})) == Permutation::identity(3));
    CHECK_THROWS_AS(rs_inverse(t({{1, 2}}), t({{1}, {2}})), std::invalid_argument);

    // round-trip over every permutation of small sizes
    for (int n = 1; n <= 7; ++n)
        for_each_permutation(n, [&](const Permutation& rho) {
            const RSPair pair = rs_insert(rho);
            CHECK(pair.p.shape() == pair.q.shape());
            CHECK(rs_inverse(pair.p, pair.q) == rho);
        });
}

TEST_CASE("point sets from permutations") {
    CHECK(points_from_permutation(Permutation({6, 2, 4, 5, 3, 1, 7})) == kSample7);
    CHECK(points_from_permutation(Permutation::identity(3)) ==
          pts({{1, 1}, {2, 2}, {3, 3}}));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const Permutation rho = random_perm(10, rng);
        const auto direct = points_from_permutation(rho.inverse());
        const PlanarPointSet original = points_from_permutation(rho);
        std::vector<Point> reflected;
        for (Point p : original.points()) reflected.push_back({p.y, p.x});
        CHECK(direct == PlanarPointSet(std::move(reflected)));
    }

    CHECK_THROWS_AS(pts({{1, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(pts({{1, 1}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("ne block points") {
    const StandardTableau p = t({{1, 3, 5, 6}, {2, 7, 9, 11}, {4, 8, 10, 12}});
    const StandardTableau q = t({{1, 2, 3, 7}, {4, 5, 6, 10}, {8, 9, 11, 12}});
    const Permutation rho = prom_perms(stack(p, q)).prom(3);
    CHECK(ne_block_points(rho) == pts({{1, 7}, {4, 2}, {8, 1},
                                       {2, 8}, {5, 4}, {9, 3},
                                       {3, 10}, {6, 6}, {11, 5},
                                       {7, 12}, {10, 11}, {12, 9}}));
    CHECK(ne_block_points(Permutation({2, 1})) == pts({{1, 1}}));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Permutation rho2 = random_perm(12, rng);
        int expect = 0;
        for (int j = 1; j <= 6; ++j)
            if (rho2(j) > 6) ++expect;
        CHECK(ne_block_points(rho2).size() == expect);
    }
}

TEST_CASE("shadow lines of the worked example") {
    const ShadowDecomposition dec = shadow_lines(kSample7, Direction::NE);
    REQUIRE(dec.lines.size() == 4);
    CHECK(dec.lines[0] == std::vector<Point>{{1, 6}, {2, 2}, {6, 1}});
    CHECK(dec.lines[1] == std::vector<Point>{{3, 4}, {5, 3}});
    CHECK(dec.lines[2] == std::vector<Point>{{4, 5}});
    CHECK(dec.lines[3] == std::vector<Point>{{7, 7}});

    CHECK(shadow_lines(pts({{3, 3}}), Direction::NE).lines ==
          std::vector<std::vector<Point>>{{{3, 3}}});
}

TEST_CASE("shadow lines partition the points and reflect between NE and SW") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const Permutation rho = random_perm(12, rng);
        const PlanarPointSet set = points_from_permutation(rho);
        const ShadowDecomposition ne = shadow_lines(set, Direction::NE);
        std::set<Point> all;
        for (const auto& line : ne.lines) {
            for (std::size_t i = 0; i + 1 < line.size(); ++i) {
                CHECK(line[i].x < line[i + 1].x);
                CHECK(line[i].y > line[i + 1].y);  // staircase
            }
            all.insert(line.begin(), line.end());
        }
        CHECK(static_cast<int>(all.size()) == set.size());

        // NE lines of P = SW lines of -P, point-reflected back
        std::vector<Point> negated;
        for (Point p : set.points()) negated.push_back({-p.x, -p.y});
        const ShadowDecomposition sw = shadow_lines(PlanarPointSet(std::move(negated)), Direction::SW);
        REQUIRE(sw.lines.size() == ne.lines.size());
        for (std::size_t i = 0; i < sw.lines.size(); ++i) {
            std::vector<Point> back;
            for (Point p : sw.lines[i]) back.push_back({-p.x, -p.y});
            std::sort(back.begin(), back.end());
            CHECK(back == ne.lines[i]);
        }
    }
}

TEST_CASE("skeleton fixtures") {
    CHECK(skeleton(kSample7, Direction::NE) == pts({{2, 6}, {5, 4}, {6, 2}}));
    CHECK(skeleton(skeleton(kSample7, Direction::NE), Direction::NE) == pts({{5, 6}, {6, 4}}));
    CHECK(skeleton(skeleton(skeleton(kSample7, Direction::NE), Direction::NE), Direction::NE) ==
          pts({{6, 6}}));
    CHECK(skeleton(pts({{4, 4}}), Direction::NE).empty());
}

TEST_CASE("per-line skeleton rule matches the covered-by-two-shadows definition") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const Permutation rho = random_perm(8, rng);
        const PlanarPointSet set = points_from_permutation(rho);
        std::vector<Point> expect;
        for (const auto& line : shadow_lines(set, Direction::NE).lines)
            for (const Point& p : skeleton_region_oracle(line)) expect.push_back(p);
        std::sort(expect.begin(), expect.end());
        CHECK(skeleton(set, Direction::NE).points() == expect);
    }
}

TEST_CASE("skeleton size drops by the number of lines") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const Permutation rho = random_perm(11, rng);
        const PlanarPointSet set = points_from_permutation(rho);
        for (Direction d : {Direction::NE, Direction::SE, Direction::SW, Direction::NW}) {
            const auto lines = shadow_lines(set, d).lines;
            CHECK(skeleton(set, d).size() == set.size() - static_cast<int>(lines.size()));
        }
    }
}

TEST_CASE("viennot fixtures") {
    const RSPair direct = viennot(kSample7, Direction::NE);
    CHECK(direct.p == t({{1, 3, 5, 7}, {2}, {4}, {6}}));
    CHECK(direct.q == t({{1, 3, 4, 7}, {2}, {5}, {6}}));
    const ViennotOverlay overlay = viennot_overlay(kSample7, Direction::NE);
    CHECK(overlay.word_p == LatticeWord{1, 2, 1, 3, 1, 4, 1});
    CHECK(overlay.word_q == LatticeWord{1, 2, 1, 1, 3, 4, 1});
    REQUIRE(overlay.skeleta.size() == 4);
    CHECK(overlay.skeleta[1] == pts({{2, 6}, {5, 4}, {6, 2}}));
    CHECK(overlay.skeleta[2] == pts({{5, 6}, {6, 4}}));
    CHECK(overlay.skeleta[3] == pts({{6, 6}}));

    const RSPair single = viennot(pts({{1, 1}}), Direction::SE);
    CHECK(single.p == t({{1}}));
    CHECK(single.q == t({{1}}));

    // overlay of the stacked running example reads evacuate(P) and Q
    const StandardTableau p = t({{1, 3, 5, 6}, {2, 7, 9, 11}, {4, 8, 10, 12}});
    const StandardTableau q = t({{1, 2, 3, 7}, {4, 5, 6, 10}, {8, 9, 11, 12}});
    const Permutation rho = prom_perms(stack(p, q)).prom(3);
    const RSPair main = viennot(ne_block_points(rho), Direction::NE);
    CHECK(main.p == evacuate(p));
    CHECK(main.q == q);
}

TEST_CASE("viennot computes row insertion") {
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& rho) {
            const RSPair direct = rs_insert(rho);
            const RSPair geometric = viennot(points_from_permutation(rho), Direction::NE);
            CHECK(geometric.p == direct.p);
            CHECK(geometric.q == direct.q);
        });
    std::mt19937 rng(41);
    for (int trial = 0; trial < 1000; ++trial) {
        const Permutation rho = random_perm(12, rng);
        const RSPair direct = rs_insert(rho);
        const RSPair geometric = viennot(points_from_permutation(rho), Direction::NE);
        CHECK(geometric.p == direct.p);
        CHECK(geometric.q == direct.q);
    }
}

TEST_CASE("viennot under the other light directions") {
    std::mt19937 rng(43);
    auto check_directions = [](const Permutation& rho) {
        const PlanarPointSet set = points_from_permutation(rho);
        const auto [p, q] = viennot(set, Direction::NE);
        const RSPair se = viennot(set, Direction::SE);
        CHECK(se.p == transpose(q));
        CHECK(se.q == transpose(evacuate(p)));
        const RSPair sw = viennot(set, Direction::SW);
        CHECK(sw.p == evacuate(p));
        CHECK(sw.q == evacuate(q));
        const RSPair nw = viennot(set, Direction::NW);
        CHECK(nw.p == transpose(evacuate(q)));
        CHECK(nw.q == transpose(p));
    };
    for (int n = 1; n <= 5; ++n) for_each_permutation(n, check_directions);
    for (int trial = 0; trial < 200; ++trial) check_directions(random_perm(12, rng));
}

TEST_CASE("greene statistics") {
    // fixture frozen from the insertion-shape oracle: shape of the word below
    // is transpose(Q) with 4 rows and 3 columns
    CHECK(greene_stats({7, 10, 3, 12, 2, 1, 6, 11, 5, 9, 4, 8}) == std::pair<int, int>{3, 4});
    CHECK(greene_stats({1, 2, 3, 4, 5}) == std::pair<int, int>{5, 1});

    std::mt19937 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const Permutation rho = random_perm(10, rng);
        const auto [inc, dec] = greene_stats(rho.one_line());
        const Partition shape = rs_insert(rho).p.shape();
        CHECK(inc == shape.part(0));          // first-row length
        CHECK(dec == shape.conjugate().part(0));  // column count
    }
}
