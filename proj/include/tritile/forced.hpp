#pragma once

#include <set>

#include "tritile/region_graph.hpp"

namespace tritile {

// Unit lattice segment with ordered endpoints.
struct GridSegment {
    Vertex a;
    Vertex b;
    auto operator<=>(const GridSegment&) const = default;
};

GridSegment make_segment(const Vertex&, const Vertex&);
bool segment_on_boundary(const GridSegment&, int n);
std::vector<GridSegment> interior_segments(int n);

// The unique up/down cell pair an interior segment separates.
struct SegmentCells {
    UpCell up;
    DownCell down;
};
SegmentCells segment_cells(const GridSegment&, int n);
GridSegment segment_between(const UpCell&, const DownCell&);

// Interior segments on the boundary of a sub-triangle.
std::vector<GridSegment> triangle_boundary_segments(const SubTriangle&, int n);

enum class ForcedMethod { Scc, Procedure, Oracle };

struct ForcedReport {
    ForcedMethod method{};
    std::set<GridSegment> segments;
};

// A segment drawn by the tiling is forced iff its two regions sit in
// different strongly connected components.  Independent of which tiling of
// the arrangement was given.
ForcedReport forced_segments_scc(const Tiling&);

// Arrangement-only: saturated-triangle boundaries, then rhombi placed where
// a cell has a single partner left (starting at saturated corners, stopping
// at holes), with their outlines.
ForcedReport forced_segments_procedure(const HoleArrangement&);

// Ground truth by enumeration: segments present in every tiling.
ForcedReport forced_segments_oracle(const HoleArrangement&);

}  // namespace tritile
