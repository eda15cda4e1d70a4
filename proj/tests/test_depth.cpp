#include <doctest.h>

#include <cstdlib>
#include <set>
#include <utility>
#include <vector>

#include "common.hpp"
#include "tritile/depth.hpp"
#include "tritile/gd_flip.hpp"

using namespace tritile;
using namespace tritile::testing;

namespace {

constexpr Compass all_rays[] = {Compass::E,  Compass::W,  Compass::NE,
                                Compass::NW, Compass::SE, Compass::SW};

// Vertices where the two fields disagree, with the signed change.
std::vector<std::pair<Vertex, int>> field_diff(const DepthField& a, const DepthField& b) {
    std::vector<std::pair<Vertex, int>> out;
    for (int row = 0; row <= a.n; ++row)
        for (int pos = 0; pos <= row; ++pos) {
            const int da = a.value[static_cast<std::size_t>(row)][static_cast<std::size_t>(pos)];
            const int db = b.value[static_cast<std::size_t>(row)][static_cast<std::size_t>(pos)];
            if (da != db) out.emplace_back(Vertex{row, pos}, db - da);
        }
    return out;
}

// Vertices with a positive depth.
std::set<Vertex> support(const DepthField& f) {
    std::set<Vertex> out;
    for (int row = 0; row <= f.n; ++row)
        for (int pos = 0; pos <= row; ++pos)
            if (f.value[static_cast<std::size_t>(row)][static_cast<std::size_t>(pos)] > 0)
                out.insert(Vertex{row, pos});
    return out;
}

// All lattice vertices on the closed sub-triangle, k == 0 included.
std::set<Vertex> closed_vertices(const SubTriangle& t) {
    std::set<Vertex> out;
    for (int row = t.r; row <= t.r + t.k; ++row)
        for (int pos = t.i; pos <= t.i + (row - t.r); ++pos) out.insert(Vertex{row, pos});
    return out;
}

}  // namespace

TEST_SUITE("depth") {

TEST_CASE("short diagonals") {
    const DownCell d{1, 0};
    CHECK(short_diagonal(d, Dir::N) == make_segment(Vertex{1, 0}, Vertex{1, 1}));
    CHECK(short_diagonal(d, Dir::W) == make_segment(Vertex{1, 0}, Vertex{2, 1}));
    CHECK(short_diagonal(d, Dir::E) == make_segment(Vertex{1, 1}, Vertex{2, 1}));
    // The diagonal is the edge shared by the paired cells.
    for (int r = 1; r <= 3; ++r)
        for (int i = 0; i < r; ++i)
            for (const Dir dir : {Dir::N, Dir::W, Dir::E})
                CHECK(short_diagonal(DownCell{r, i}, dir) ==
                      segment_between(up_neighbor(DownCell{r, i}, dir), DownCell{r, i}));
}

TEST_CASE("field shape") {
    const DepthField f = depth_field(corner3_a(), Compass::E);
    CHECK(f.n == 3);
    CHECK(f.ray == Compass::E);
    REQUIRE(f.value.size() == 4);
    for (int row = 0; row <= 3; ++row)
        CHECK(f.value[static_cast<std::size_t>(row)].size() ==
              static_cast<std::size_t>(row) + 1);
}

TEST_CASE("a tiling of all vertical rhombi counts rows eastward") {
    // Holes across the bottom force every down cell to pair upward.
    const HoleArrangement a = make_arrangement(
        4, {SubTriangle{3, 0, 1}, SubTriangle{3, 1, 1}, SubTriangle{3, 2, 1},
            SubTriangle{3, 3, 1}});
    const auto t = construct(a);
    REQUIRE(t.has_value());
    for (const auto& [d, dir] : t->rhombi) CHECK(dir == Dir::N);

    const DepthField f = depth_field(*t, Compass::E);
    for (int row = 0; row <= 4; ++row)
        for (int pos = 0; pos <= row; ++pos) {
            const int expect = (row >= 1 && row <= 3) ? row - pos : 0;
            CHECK(f.value[static_cast<std::size_t>(row)][static_cast<std::size_t>(pos)] ==
                  expect);
        }
}

TEST_CASE("tilings without rhombi have zero depth everywhere") {
    const auto one = construct(make_arrangement(1, {SubTriangle{0, 0, 1}}));
    const auto full = construct(make_arrangement(2, {SubTriangle{0, 0, 2}}));
    REQUIRE(one.has_value());
    REQUIRE(full.has_value());
    for (const Compass ray : all_rays) {
        CHECK(support(depth_field(*one, ray)).empty());
        CHECK(support(depth_field(*full, ray)).empty());
    }
}

TEST_CASE("depth supports of the two corner tilings") {
    const Tiling a = corner3_a(), b = corner3_b();
    CHECK(support(depth_field(a, Compass::E)) == std::set<Vertex>{{2, 0}, {2, 1}});
    CHECK(support(depth_field(a, Compass::W)) == std::set<Vertex>{{2, 2}});
    CHECK(support(depth_field(a, Compass::SE)) == std::set<Vertex>{{1, 0}});
    CHECK(support(depth_field(a, Compass::NW)) == std::set<Vertex>{{2, 1}, {3, 2}});
    CHECK(support(depth_field(a, Compass::SW)) == std::set<Vertex>{{1, 1}, {2, 1}});
    CHECK(support(depth_field(a, Compass::NE)) == std::set<Vertex>{{3, 1}});

    CHECK(support(depth_field(b, Compass::E)) == std::set<Vertex>{{2, 0}});
    CHECK(support(depth_field(b, Compass::W)) == std::set<Vertex>{{2, 1}, {2, 2}});
    CHECK(support(depth_field(b, Compass::SE)) == std::set<Vertex>{{1, 0}, {2, 1}});
    CHECK(support(depth_field(b, Compass::NW)) == std::set<Vertex>{{3, 2}});
    CHECK(support(depth_field(b, Compass::SW)) == std::set<Vertex>{{1, 1}});
    CHECK(support(depth_field(b, Compass::NE)) == std::set<Vertex>{{2, 1}, {3, 1}});

    // They disagree at the hexagon center alone, by one, on every ray.
    for (const Compass ray : all_rays) {
        const auto diff = field_diff(depth_field(a, ray), depth_field(b, ray));
        REQUIRE(diff.size() == 1);
        CHECK(diff[0].first == Vertex{2, 1});
        CHECK(std::abs(diff[0].second) == 1);
    }
}

TEST_CASE("depth changes by at most one between neighbours") {
    for (const HoleArrangement& a : all_unit_arrangements(3)) {
        if (!is_spread_out(a).ok) continue;
        for (const Tiling& t : enumerate_tilings(a))
            for (const Compass ray : all_rays) {
                const DepthField f = depth_field(t, ray);
                const auto at = [&](int row, int pos) {
                    return f.value[static_cast<std::size_t>(row)]
                                  [static_cast<std::size_t>(pos)];
                };
                for (int row = 0; row <= 3; ++row)
                    for (int pos = 0; pos <= row; ++pos) {
                        if (pos < row)
                            CHECK(std::abs(at(row, pos) - at(row, pos + 1)) <= 1);
                        if (row < 3) {
                            CHECK(std::abs(at(row, pos) - at(row + 1, pos)) <= 1);
                            CHECK(std::abs(at(row, pos) - at(row + 1, pos + 1)) <= 1);
                        }
                    }
            }
    }
}

TEST_CASE("a GD flip moves depth exactly on its interior vertices") {
    for (const HoleArrangement& a : all_unit_arrangements(3)) {
        if (!is_spread_out(a).ok) continue;
        for (const Tiling& t : enumerate_tilings(a))
            for (const GdFrame& gd : find_cw_gds(t)) {
                const Tiling u = apply_gd_flip(t, gd);
                const std::set<Vertex> expect = closed_vertices(gd.interior());
                for (const Compass ray : all_rays) {
                    const auto diff = field_diff(depth_field(t, ray), depth_field(u, ray));
                    std::set<Vertex> where;
                    for (const auto& [v, delta] : diff) {
                        CHECK(std::abs(delta) == 1);
                        where.insert(v);
                    }
                    CHECK(where == expect);
                }
            }
    }
}

}  // TEST_SUITE
