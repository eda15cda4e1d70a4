#pragma once

#include <iosfwd>

#include "tritile/depth.hpp"

namespace tritile {

enum class Overlay { None, Graph, Forced, Depth };

struct RenderOptions {
    Overlay overlay = Overlay::None;
    Compass depth_ray = Compass::E;  // used by the depth overlay
    double scale = 48.0;             // pixels per unit edge
};

// Deterministic standalone SVG of the subdivision; coordinates rounded to
// two decimals.
void render_svg(std::ostream&, const Tiling&, const RenderOptions& = {});

}  // namespace tritile
