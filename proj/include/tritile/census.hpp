#pragma once

#include <cstdint>
#include <map>

#include "tritile/arrangement.hpp"

namespace tritile {

// Exhaustive sweep over every way to drop n unit holes on the board.
struct CensusReport {
    int n = 0;
    std::uint64_t candidates = 0;         // C(n(n+1)/2, n) arrangements
    std::uint64_t spread_out = 0;         // equals the tileable count
    std::uint64_t uniquely_tileable = 0;
    std::map<std::uint64_t, std::uint64_t> tiling_histogram;  // count -> arrangements
};

// Work is chunked by the first hole cell and spread across threads
// (0 picks the hardware count); partial results merge in chunk order, so
// the report never depends on scheduling.
CensusReport census(int n, int threads = 0);

}  // namespace tritile
