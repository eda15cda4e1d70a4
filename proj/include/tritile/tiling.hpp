#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "tritile/arrangement.hpp"

namespace tritile {

// A rhombus for every down cell outside the holes; Dir names the up cell it
// covers.  Up cells not covered by any rhombus are exactly the hole cells.
struct Tiling {
    HoleArrangement arrangement;
    std::map<DownCell, Dir> rhombi;
};

// First broken invariant, as a report instead of a throw.
struct TilingCheck {
    bool ok = true;
    std::string message;
};
TilingCheck validate_tiling(const Tiling&);

// Up cell of the rhombus sitting on a down cell, nullopt for hole cells.
std::optional<UpCell> matched_up(const Tiling&, const DownCell&);

// Inverse of the rhombus map: covering rhombus of an up cell.
std::map<UpCell, DownCell> up_to_down(const Tiling&);

bool in_some_hole(const HoleArrangement&, const UpCell&);
bool in_some_hole(const HoleArrangement&, const DownCell&);
// Index into arrangement.holes, or -1.
int hole_index(const HoleArrangement&, const UpCell&);
int hole_index(const HoleArrangement&, const DownCell&);

// Maximum matching between down cells and free up cells (augmenting paths
// over the unitized arrangement).  nullopt when no tiling exists, which for
// a valid arrangement happens iff it is not spread out.
std::optional<Tiling> construct(const HoleArrangement&);

// Backtracking enumeration: down cells row-major, directions N, W, E.
// The visitor returns false to stop.  Yields nothing when untileable.
void for_each_tiling(const HoleArrangement&,
                     const std::function<bool(const Tiling&)>& visit);

std::vector<Tiling> enumerate_tilings(const HoleArrangement&,
                                      std::uint64_t limit = UINT64_MAX);
std::uint64_t count_tilings(const HoleArrangement&);
// Stops counting at cap; a return of cap means "cap or more".
std::uint64_t count_tilings_at_most(const HoleArrangement&, std::uint64_t cap);

// Same tilings, unit holes: rhombi inside a bigger hole all point N.
Tiling unitize_tiling(const Tiling&);

// Stable identity of a tiling, usable as a map key.
std::string tiling_key(const Tiling&);

}  // namespace tritile
