#pragma once

#include "tritile/forced.hpp"

namespace tritile {

// Short diagonal of a rhombus: the edge its two cells share.
GridSegment short_diagonal(const DownCell&, Dir);

// Depth of a vertex along a ray: how many rhombi of the tiling have their
// short diagonal lying on the ray cast from the vertex in that direction.
struct DepthField {
    int n = 0;
    Compass ray{};
    std::vector<std::vector<int>> value;  // value[row][pos], 0 <= pos <= row <= n
};

DepthField depth_field(const Tiling&, Compass ray);

}  // namespace tritile
