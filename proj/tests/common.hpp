#pragma once

#include <vector>

#include "tritile/arrangement.hpp"
#include "tritile/errors.hpp"
#include "tritile/tiling.hpp"

namespace tritile::testing {

// Side-3 triangle with the three corner cells as holes: the smallest
// instance with two tilings, used all over the suite.
inline HoleArrangement corner3() {
    return make_arrangement(
        3, {SubTriangle{0, 0, 1}, SubTriangle{2, 0, 1}, SubTriangle{2, 2, 1}});
}

// Its two tilings: a's rhombus cycle runs counterclockwise, b's clockwise.
inline Tiling corner3_a() {
    return Tiling{corner3(),
                  {{DownCell{1, 0}, Dir::W}, {DownCell{2, 0}, Dir::E}, {DownCell{2, 1}, Dir::N}}};
}
inline Tiling corner3_b() {
    return Tiling{corner3(),
                  {{DownCell{1, 0}, Dir::E}, {DownCell{2, 0}, Dir::N}, {DownCell{2, 1}, Dir::W}}};
}

// Corner cells plus a centered side-3 hole: side-6 instance with two
// tilings one ring flip apart.
inline HoleArrangement mid6() {
    return make_arrangement(6, {SubTriangle{0, 0, 1}, SubTriangle{2, 1, 3},
                                SubTriangle{5, 0, 1}, SubTriangle{5, 5, 1}});
}

// All ways to drop n unit holes on the side-n board, valid by construction.
inline std::vector<HoleArrangement> all_unit_arrangements(int n) {
    std::vector<UpCell> cells;
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= r; ++i) cells.push_back(UpCell{r, i});
    std::vector<HoleArrangement> out;
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) idx[static_cast<std::size_t>(j)] = j;
    const int m = static_cast<int>(cells.size());
    while (true) {
        std::vector<SubTriangle> holes;
        for (int j : idx) holes.push_back(SubTriangle{cells[static_cast<std::size_t>(j)].r,
                                                      cells[static_cast<std::size_t>(j)].i, 1});
        out.push_back(HoleArrangement{n, holes});
        int t = n - 1;
        while (t >= 0 && idx[static_cast<std::size_t>(t)] == m - n + t) --t;
        if (t < 0) break;
        ++idx[static_cast<std::size_t>(t)];
        for (int j = t + 1; j < n; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

// Every valid arrangement of the side-n board, holes of any size.
inline std::vector<HoleArrangement> all_arrangements(int n) {
    const std::vector<SubTriangle> tris = enumerate_subtriangles(n);
    std::vector<HoleArrangement> out;
    std::vector<SubTriangle> chosen;
    const auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            try {
                out.push_back(make_arrangement(n, chosen));
            } catch (const ValidationError&) {
            }
            return;
        }
        for (std::size_t j = from; j < tris.size(); ++j) {
            if (tris[j].k > left) continue;
            chosen.push_back(tris[j]);
            self(self, j + 1, left - tris[j].k);
            chosen.pop_back();
        }
    };
    rec(rec, 0, n);
    return out;
}

}  // namespace tritile::testing
