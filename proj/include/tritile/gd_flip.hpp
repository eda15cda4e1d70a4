#pragma once

#include <array>
#include <utility>
#include <vector>

#include "tritile/tiling.hpp"

namespace tritile {

// A GD of interior size m sits in a frame of side m + 3: the ring between
// the frame's three corner cells, its central side-m triangle, and its
// boundary, tiled by 3(m+1) rhombi going around.  The m == 0 case is the
// plain hexagon flip.
struct GdFrame {
    SubTriangle frame;

    int interior_size() const { return frame.k - 3; }
    SubTriangle interior() const {
        return SubTriangle{frame.r + 2, frame.i + 1, frame.k - 3};
    }
    std::array<UpCell, 3> corner_cells() const {
        return {UpCell{frame.r, frame.i}, UpCell{frame.r + frame.k - 1, frame.i},
                UpCell{frame.r + frame.k - 1, frame.i + frame.k - 1}};
    }
    auto operator<=>(const GdFrame&) const = default;
};

// The ring's two tilings.  CW runs its vertical rhombi along the frame's
// left side, CCW along the right side.  Both cover the same down cells.
std::vector<std::pair<DownCell, Dir>> ring_pattern(const GdFrame&, Rotation);

// Frames whose ring rhombi match the pattern exactly, sorted by (r, i, k).
std::vector<GdFrame> find_cw_gds(const Tiling&);
std::vector<GdFrame> find_ccw_gds(const Tiling&);

Tiling apply_gd_flip(const Tiling&, const GdFrame&);          // CW -> CCW
Tiling apply_gd_flip_inverse(const Tiling&, const GdFrame&);  // CCW -> CW

// Flips keep the number of vertical rhombi; each CW -> CCW flip strictly
// raises the potential, so canonicalization terminates.
int vertical_rhombus_count(const Tiling&);
long long potential(const Tiling&);

enum class CanonicalTarget { NoCw, NoCcw };
struct CanonicalizeResult {
    Tiling tiling;
    int flips = 0;
};
// Repeatedly flip the lexicographically smallest offending frame.
CanonicalizeResult canonicalize(const Tiling&, CanonicalTarget);

// Whether CW-GD flips connect all tilings of the arrangement.
bool gd_connected(const HoleArrangement&);

}  // namespace tritile
