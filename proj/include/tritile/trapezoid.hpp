#pragma once

#include <cstdint>

#include "tritile/tiling.hpp"

namespace tritile {

// Sliding a unit hole across an adjacent rhombus: the union of the hole
// cell and the rhombus is a trapezoid of three cells along one lane of the
// grid, retiled the only other way.  The hole lands on the far up cell and
// the rhombus re-pairs with the vacated one.
struct TrapezoidFlip {
    UpCell hole;       // unit hole before the flip
    DownCell through;  // adjacent rhombus' down cell
    UpCell landing;    // its up cell, the hole position after the flip
    auto operator<=>(const TrapezoidFlip&) const = default;
};

// Compass direction the hole travels, determined by which side `through`
// sits on and which way it is currently paired.
Compass flip_direction(const TrapezoidFlip&);

// Every (unit hole, adjacent rhombus) pair is a flip; holes of size >= 2
// never move.  Ordered by hole cell, then side (left, right, below).
std::vector<TrapezoidFlip> list_trapezoid_flips(const Tiling&);

Tiling apply_trapezoid_flip(const Tiling&, const TrapezoidFlip&);
// Convenience: the flip moving `hole` towards `c`, if currently available.
Tiling apply_trapezoid_flip(const Tiling&, const UpCell& hole, Compass c);

// Distances of a unit hole from the three sides; they sum to n - 1 and a
// flip changes exactly two of them by one.
struct HeightVector {
    int bottom = 0;
    int left = 0;
    int right = 0;
};
HeightVector heights(const UpCell& hole, int n);

// Flips needed to herd every hole of both tilings onto one side, for the
// cheapest side: min over the three axes of the summed heights.  At most
// floor(2n(n-1)/3).
int upper_bound_distance(const Tiling&, const Tiling&);

// Exact distance in the trapezoid flip graph by breadth-first search over
// tilings (the arrangement moves with the holes).  nullopt when t2 is
// unreachable; throws ResourceLimitError past state_cap visited states.
std::optional<int> flip_distance(const Tiling& t1, const Tiling& t2,
                                 std::uint64_t state_cap = 10'000'000);

// A maximally distant pair over the same arrangement: every down cell pairs
// with its corner vertex of the given residue class (x mod 3), sweeping
// clockwise in one tiling and counterclockwise in the other.  The two share
// no rhombus.
std::pair<Tiling, Tiling> hexagon_pair(int n, int residue_class);

// Interior lattice vertices of the given class: each one is the center of a
// proper hexagon of six cells, so it separates the pairings locally.
int full_hexagon_count(int n, int residue_class);

}  // namespace tritile
