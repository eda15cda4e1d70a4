#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "common.hpp"
#include "tritile/errors.hpp"
#include "tritile/trapezoid.hpp"

using namespace tritile;
using namespace tritile::testing;

TEST_SUITE("trapezoid") {

TEST_CASE("flips available in the corner tiling") {
    const auto flips = list_trapezoid_flips(corner3_a());
    REQUIRE(flips.size() == 3);
    CHECK(flips[0] == TrapezoidFlip{UpCell{0, 0}, DownCell{1, 0}, UpCell{1, 0}});
    CHECK(flips[1] == TrapezoidFlip{UpCell{2, 0}, DownCell{2, 0}, UpCell{2, 1}});
    CHECK(flips[2] == TrapezoidFlip{UpCell{2, 2}, DownCell{2, 1}, UpCell{1, 1}});
    CHECK(flip_direction(flips[0]) == Compass::SW);
    CHECK(flip_direction(flips[1]) == Compass::E);
    CHECK(flip_direction(flips[2]) == Compass::NW);
}

TEST_CASE("applying a flip moves the hole and re-pairs the rhombus") {
    const auto flips = list_trapezoid_flips(corner3_a());
    const Tiling after = apply_trapezoid_flip(corner3_a(), flips[0]);
    CHECK(after.arrangement.holes ==
          std::vector<SubTriangle>{{1, 0, 1}, {2, 0, 1}, {2, 2, 1}});
    CHECK(after.rhombi == std::map<DownCell, Dir>{{DownCell{1, 0}, Dir::N},
                                                  {DownCell{2, 0}, Dir::E},
                                                  {DownCell{2, 1}, Dir::N}});
    CHECK(validate_tiling(after).ok);

    // The opposite move undoes it.
    const Tiling back = apply_trapezoid_flip(after, UpCell{1, 0}, Compass::NE);
    CHECK(back.arrangement.holes == corner3().holes);
    CHECK(back.rhombi == corner3_a().rhombi);
}

TEST_CASE("every listed flip is reversible") {
    for (const HoleArrangement& a : all_unit_arrangements(4)) {
        if (!is_spread_out(a).ok) continue;
        for (const Tiling& t : enumerate_tilings(a))
            for (const TrapezoidFlip& f : list_trapezoid_flips(t)) {
                const Tiling moved = apply_trapezoid_flip(t, f);
                CHECK(validate_tiling(moved).ok);
                const TrapezoidFlip reverse{f.landing, f.through, f.hole};
                CHECK(apply_trapezoid_flip(moved, reverse).rhombi == t.rhombi);
            }
    }
}

TEST_CASE("bad flips are rejected") {
    // Source is not a hole.
    CHECK_THROWS_AS(
        apply_trapezoid_flip(corner3_a(),
                             TrapezoidFlip{UpCell{1, 0}, DownCell{2, 1}, UpCell{1, 1}}),
        FlipError);
    // The rhombus is paired away from the claimed landing cell.
    CHECK_THROWS_AS(
        apply_trapezoid_flip(corner3_a(),
                             TrapezoidFlip{UpCell{0, 0}, DownCell{1, 0}, UpCell{1, 1}}),
        FlipError);
    // No flip moves the apex hole northeast.
    CHECK_THROWS_AS(apply_trapezoid_flip(corner3_a(), UpCell{0, 0}, Compass::NE),
                    FlipError);
    // Big holes never move.
    const auto ts = enumerate_tilings(mid6());
    REQUIRE(!ts.empty());
    CHECK_THROWS_AS(list_trapezoid_flips(ts[0]), ValidationError);
}

TEST_CASE("heights sum to the side minus one") {
    const HeightVector apex = heights(UpCell{0, 0}, 3);
    CHECK(apex.bottom == 2);
    CHECK(apex.left == 0);
    CHECK(apex.right == 0);
    for (int r = 0; r < 5; ++r)
        for (int i = 0; i <= r; ++i) {
            const HeightVector h = heights(UpCell{r, i}, 5);
            CHECK(h.bottom + h.left + h.right == 4);
        }
}

TEST_CASE("each flip shifts exactly two heights by one") {
    for (const HoleArrangement& a : all_unit_arrangements(3)) {
        if (!is_spread_out(a).ok) continue;
        for (const Tiling& t : enumerate_tilings(a))
            for (const TrapezoidFlip& f : list_trapezoid_flips(t)) {
                const HeightVector before = heights(f.hole, 3);
                const HeightVector after = heights(f.landing, 3);
                const int db = std::abs(after.bottom - before.bottom);
                const int dl = std::abs(after.left - before.left);
                const int dr = std::abs(after.right - before.right);
                CHECK(db + dl + dr == 2);
                CHECK(db <= 1);
                CHECK(dl <= 1);
                CHECK(dr <= 1);
            }
    }
}

TEST_CASE("distance between the corner tilings") {
    CHECK(upper_bound_distance(corner3_a(), corner3_b()) == 4);
    CHECK(flip_distance(corner3_a(), corner3_b()) == 4);
    CHECK(flip_distance(corner3_a(), corner3_a()) == 0);
    CHECK(flip_distance(corner3_b(), corner3_a()) == 4);
}

TEST_CASE("exact distance never beats the herding bound") {
    // All unit tilings of the side-3 board, across arrangements.
    std::vector<Tiling> all;
    for (const HoleArrangement& a : all_unit_arrangements(3))
        for (const Tiling& t : enumerate_tilings(a)) all.push_back(t);
    CHECK(all.size() == 18);
    for (const Tiling& s : all)
        for (const Tiling& t : all) {
            const int bound = upper_bound_distance(s, t);
            CHECK(bound <= 2 * 3 * 2 / 3);
            const auto exact = flip_distance(s, t);
            REQUIRE(exact.has_value());
            CHECK(*exact <= bound);
            CHECK((*exact == 0) == (tiling_key(s) == tiling_key(t)));
        }
}

TEST_CASE("distance guards") {
    CHECK_THROWS_AS(flip_distance(corner3_a(), corner3_b(), 1), ResourceLimitError);
    const auto t4 = construct(make_arrangement(
        4, {SubTriangle{0, 0, 1}, SubTriangle{1, 0, 1}, SubTriangle{2, 0, 1},
            SubTriangle{3, 0, 1}}));
    REQUIRE(t4.has_value());
    CHECK_THROWS_AS(flip_distance(corner3_a(), *t4), ValidationError);
    CHECK_THROWS_AS(upper_bound_distance(corner3_a(), *t4), ValidationError);

    // A tiling with a big hole is not in the unit flip graph.
    const auto coarse = construct(make_arrangement(2, {SubTriangle{0, 0, 2}}));
    const auto fine = construct(make_arrangement(
        2, {SubTriangle{0, 0, 1}, SubTriangle{1, 0, 1}}));
    REQUIRE(coarse.has_value());
    REQUIRE(fine.has_value());
    CHECK(flip_distance(*fine, *coarse) == std::nullopt);
}

TEST_CASE("hexagon pair on the side-3 board is the corner pair") {
    const auto [cw, ccw] = hexagon_pair(3, 0);
    CHECK(cw.arrangement.holes == corner3().holes);
    CHECK(ccw.arrangement.holes == corner3().holes);
    CHECK(cw.rhombi == corner3_b().rhombi);
    CHECK(ccw.rhombi == corner3_a().rhombi);
}

TEST_CASE("hexagon pair on the side-4 board") {
    const auto [cw, ccw] = hexagon_pair(4, 0);
    CHECK(cw.arrangement.holes ==
          std::vector<SubTriangle>{{0, 0, 1}, {2, 0, 1}, {3, 1, 1}, {3, 3, 1}});
    CHECK(ccw.arrangement.holes ==
          std::vector<SubTriangle>{{0, 0, 1}, {2, 2, 1}, {3, 0, 1}, {3, 2, 1}});
    CHECK(cw.rhombi == std::map<DownCell, Dir>{{DownCell{1, 0}, Dir::E},
                                               {DownCell{2, 0}, Dir::N},
                                               {DownCell{2, 1}, Dir::W},
                                               {DownCell{3, 0}, Dir::W},
                                               {DownCell{3, 1}, Dir::E},
                                               {DownCell{3, 2}, Dir::N}});
    CHECK(ccw.rhombi == std::map<DownCell, Dir>{{DownCell{1, 0}, Dir::W},
                                                {DownCell{2, 0}, Dir::E},
                                                {DownCell{2, 1}, Dir::N},
                                                {DownCell{3, 0}, Dir::N},
                                                {DownCell{3, 1}, Dir::W},
                                                {DownCell{3, 2}, Dir::E}});
    CHECK(flip_distance(cw, ccw) == 7);
    CHECK(upper_bound_distance(cw, ccw) == 8);
}

TEST_CASE("the two sweeps never share a rhombus") {
    for (int n = 1; n <= 8; ++n)
        for (int c = 0; c <= 2; ++c) {
            const auto [cw, ccw] = hexagon_pair(n, c);
            CHECK(validate_tiling(cw).ok);
            CHECK(validate_tiling(ccw).ok);
            CHECK(cw.rhombi.size() == ccw.rhombi.size());
            int shared = 0;
            for (const auto& [d, dir] : cw.rhombi) {
                const auto it = ccw.rhombi.find(d);
                if (it != ccw.rhombi.end() && it->second == dir) ++shared;
            }
            CHECK(shared == 0);
        }
    CHECK_THROWS_AS(hexagon_pair(0, 0), ValidationError);
    CHECK_THROWS_AS(hexagon_pair(3, 3), ValidationError);
    CHECK_THROWS_AS(hexagon_pair(3, -1), ValidationError);
}

TEST_CASE("full hexagon counts") {
    CHECK(full_hexagon_count(3, 0) == 1);
    CHECK(full_hexagon_count(4, 0) == 1);
    CHECK(full_hexagon_count(4, 1) == 1);
    CHECK(full_hexagon_count(4, 2) == 1);
    CHECK(full_hexagon_count(5, 0) == 2);
    CHECK(full_hexagon_count(12, 0) == 19);
    // Small boards have no interior vertex of any class.
    CHECK(full_hexagon_count(1, 0) == 0);
    CHECK(full_hexagon_count(2, 1) == 0);
    // Growth floor used to size worst-case flip distances.
    for (int n = 3; n <= 30; ++n)
        CHECK(6 * full_hexagon_count(n, 0) >= n * n - 3 * n);
}

TEST_CASE("sweep distance grows past the hexagon count") {
    for (int n = 3; n <= 4; ++n) {
        const auto [cw, ccw] = hexagon_pair(n, 0);
        const auto d = flip_distance(cw, ccw);
        REQUIRE(d.has_value());
        CHECK(*d == n * (n - 1) / 2 + full_hexagon_count(n, 0));
    }
}

}  // TEST_SUITE
