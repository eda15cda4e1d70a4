#include <doctest.h>

#include <set>
#include <vector>

#include "common.hpp"
#include "tritile/errors.hpp"
#include "tritile/forced.hpp"

using namespace tritile;
using namespace tritile::testing;

TEST_SUITE("forced") {

TEST_CASE("segments are ordered and validated") {
    const GridSegment s = make_segment(Vertex{1, 1}, Vertex{1, 0});
    CHECK(s.a == Vertex{1, 0});
    CHECK(s.b == Vertex{1, 1});
    CHECK(s == make_segment(Vertex{1, 0}, Vertex{1, 1}));
    // Not a unit lattice step.
    CHECK_THROWS_AS(make_segment(Vertex{0, 0}, Vertex{2, 1}), ValidationError);
    CHECK_THROWS_AS(make_segment(Vertex{1, 0}, Vertex{1, 0}), ValidationError);
    CHECK_THROWS_AS(make_segment(Vertex{1, 0}, Vertex{2, 2}), ValidationError);
}

TEST_CASE("boundary segments") {
    CHECK(segment_on_boundary(make_segment(Vertex{3, 1}, Vertex{3, 2}), 3));
    CHECK(segment_on_boundary(make_segment(Vertex{2, 0}, Vertex{3, 0}), 3));
    CHECK(segment_on_boundary(make_segment(Vertex{1, 1}, Vertex{2, 2}), 3));
    CHECK_FALSE(segment_on_boundary(make_segment(Vertex{1, 0}, Vertex{1, 1}), 3));
    CHECK_FALSE(segment_on_boundary(make_segment(Vertex{2, 1}, Vertex{3, 1}), 3));
    // The same horizontal segment is interior on a bigger board.
    CHECK_FALSE(segment_on_boundary(make_segment(Vertex{3, 1}, Vertex{3, 2}), 4));
}

TEST_CASE("interior segment counts") {
    CHECK(interior_segments(1).empty());
    CHECK(interior_segments(2).size() == 3);
    CHECK(interior_segments(3).size() == 9);
    for (int n = 1; n <= 6; ++n)
        CHECK(static_cast<int>(interior_segments(n).size()) == 3 * n * (n - 1) / 2);
}

TEST_CASE("segments pair up cells with down cells, bijectively") {
    const int n = 4;
    // Every interior segment names one adjacent (up, down) pair and back.
    std::set<GridSegment> seen;
    for (const GridSegment& s : interior_segments(n)) {
        CHECK_FALSE(segment_on_boundary(s, n));
        const SegmentCells c = segment_cells(s, n);
        CHECK(up_valid(c.up, n));
        CHECK(down_valid(c.down, n));
        CHECK(segment_between(c.up, c.down) == s);
        seen.insert(s);
    }
    CHECK(seen.size() == interior_segments(n).size());

    // And every rhombus position names an interior segment.
    for (int r = 1; r < n; ++r)
        for (int i = 0; i < r; ++i)
            for (const Dir dir : {Dir::N, Dir::W, Dir::E}) {
                const DownCell d{r, i};
                const GridSegment s = segment_between(up_neighbor(d, dir), d);
                CHECK(seen.count(s) == 1);
                CHECK(segment_cells(s, n).down == d);
            }
}

TEST_CASE("known segment endpoints") {
    const DownCell d{1, 0};
    CHECK(segment_between(up_neighbor(d, Dir::N), d) ==
          make_segment(Vertex{1, 0}, Vertex{1, 1}));
    CHECK(segment_between(up_neighbor(d, Dir::W), d) ==
          make_segment(Vertex{1, 0}, Vertex{2, 1}));
    CHECK(segment_between(up_neighbor(d, Dir::E), d) ==
          make_segment(Vertex{1, 1}, Vertex{2, 1}));
    CHECK_THROWS_AS(segment_between(UpCell{0, 0}, DownCell{2, 1}), ValidationError);
    CHECK_THROWS_AS(segment_cells(make_segment(Vertex{2, 0}, Vertex{3, 0}), 3),
                    ValidationError);
}

TEST_CASE("triangle boundary segments clip at the board edge") {
    CHECK(triangle_boundary_segments(SubTriangle{0, 0, 1}, 3) ==
          std::vector<GridSegment>{make_segment(Vertex{1, 0}, Vertex{1, 1})});
    CHECK(triangle_boundary_segments(SubTriangle{2, 1, 3}, 6).size() == 9);
    // The whole triangle has no interior boundary at all.
    CHECK(triangle_boundary_segments(SubTriangle{0, 0, 3}, 3).empty());
    for (const GridSegment& s : triangle_boundary_segments(SubTriangle{2, 1, 3}, 6))
        CHECK_FALSE(segment_on_boundary(s, 6));
}

TEST_CASE("forced segments of the corner instance, all three ways") {
    const std::set<GridSegment> expect{make_segment(Vertex{1, 0}, Vertex{1, 1}),
                                       make_segment(Vertex{2, 0}, Vertex{3, 1}),
                                       make_segment(Vertex{2, 2}, Vertex{3, 2})};
    const ForcedReport scc = forced_segments_scc(corner3_a());
    CHECK(scc.method == ForcedMethod::Scc);
    CHECK(scc.segments == expect);

    const ForcedReport proc = forced_segments_procedure(corner3());
    CHECK(proc.method == ForcedMethod::Procedure);
    CHECK(proc.segments == expect);

    const ForcedReport oracle = forced_segments_oracle(corner3());
    CHECK(oracle.method == ForcedMethod::Oracle);
    CHECK(oracle.segments == expect);
}

TEST_CASE("scc report does not depend on the tiling") {
    CHECK(forced_segments_scc(corner3_a()).segments ==
          forced_segments_scc(corner3_b()).segments);
    const auto ts = enumerate_tilings(mid6());
    REQUIRE(ts.size() == 2);
    CHECK(forced_segments_scc(ts[0]).segments == forced_segments_scc(ts[1]).segments);
    CHECK(forced_segments_scc(ts[0]).segments == forced_segments_oracle(mid6()).segments);
    CHECK(forced_segments_procedure(mid6()).segments ==
          forced_segments_oracle(mid6()).segments);
}

TEST_CASE("all three methods agree on every small instance") {
    for (int n = 2; n <= 4; ++n)
        for (const HoleArrangement& a : all_unit_arrangements(n)) {
            if (!is_spread_out(a).ok) continue;
            const auto t = construct(a);
            REQUIRE(t.has_value());
            const auto scc = forced_segments_scc(*t).segments;
            CHECK(scc == forced_segments_procedure(a).segments);
            CHECK(scc == forced_segments_oracle(a).segments);
        }
}

TEST_CASE("untileable arrangements are rejected") {
    const HoleArrangement bad = make_arrangement(
        3, {SubTriangle{0, 0, 1}, SubTriangle{1, 0, 1}, SubTriangle{1, 1, 1}});
    CHECK_THROWS_AS(forced_segments_procedure(bad), ValidationError);
    CHECK_THROWS_AS(forced_segments_oracle(bad), ValidationError);
}

TEST_CASE("a unique tiling is forced everywhere it draws") {
    const HoleArrangement col = make_arrangement(
        3, {SubTriangle{0, 0, 1}, SubTriangle{1, 0, 1}, SubTriangle{2, 0, 1}});
    const auto t = construct(col);
    REQUIRE(t.has_value());
    const auto forced = forced_segments_scc(*t).segments;
    // Segments erased by its rhombi are gone, everything else drawn is kept.
    std::set<GridSegment> drawn;
    for (const GridSegment& s : interior_segments(3)) drawn.insert(s);
    for (const auto& [d, dir] : t->rhombi) drawn.erase(segment_between(up_neighbor(d, dir), d));
    CHECK(forced == drawn);
}

}  // TEST_SUITE
