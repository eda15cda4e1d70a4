#include "tritile/depth.hpp"

#include "tritile/errors.hpp"

namespace tritile {

GridSegment short_diagonal(const DownCell& d, Dir dir) {
    return segment_between(up_neighbor(d, dir), d);
}

DepthField depth_field(const Tiling& t, Compass ray) {
    const int n = t.arrangement.n;
    DepthField f{n, ray, {}};
    f.value.resize(static_cast<std::size_t>(n) + 1);
    for (int row = 0; row <= n; ++row)
        f.value[static_cast<std::size_t>(row)].assign(static_cast<std::size_t>(row) + 1, 0);
    const auto bump = [&](int row, int pos) {
        if (vertex_valid(Vertex{row, pos}, n))
            ++f.value[static_cast<std::size_t>(row)][static_cast<std::size_t>(pos)];
    };
    // A rhombus' diagonal lies on one lattice line; it is seen by every
    // vertex of that line on the proper side.  N diagonals are horizontal,
    // W diagonals run southeast, E diagonals run southwest.
    for (const auto& [d, dir] : t.rhombi) {
        switch (dir) {
            case Dir::N:
                switch (ray) {
                    case Compass::E:
                        for (int j = 0; j <= d.i; ++j) bump(d.r, j);
                        break;
                    case Compass::W:
                        for (int j = d.i + 1; j <= d.r; ++j) bump(d.r, j);
                        break;
                    default: break;
                }
                break;
            case Dir::W:
                switch (ray) {
                    case Compass::SE:
                        for (int s = 0; s <= d.i; ++s) bump(d.r - s, d.i - s);
                        break;
                    case Compass::NW:
                        for (int s = 0; d.r + 1 + s <= n; ++s) bump(d.r + 1 + s, d.i + 1 + s);
                        break;
                    default: break;
                }
                break;
            case Dir::E:
                switch (ray) {
                    case Compass::SW:
                        for (int row = d.i + 1; row <= d.r; ++row) bump(row, d.i + 1);
                        break;
                    case Compass::NE:
                        for (int row = d.r + 1; row <= n; ++row) bump(row, d.i + 1);
                        break;
                    default: break;
                }
                break;
        }
    }
    return f;
}

}  // namespace tritile
