#include "tritile/forced.hpp"

#include <algorithm>

#include "tritile/errors.hpp"

namespace tritile {

GridSegment make_segment(const Vertex& a, const Vertex& b) {
    return a <= b ? GridSegment{a, b} : GridSegment{b, a};
}

namespace {

// 0 horizontal, 1 down-left, 2 down-right; anything else is not a unit
// lattice segment.
int segment_kind(const GridSegment& s) {
    const int dr = s.b.row - s.a.row;
    const int dj = s.b.pos - s.a.pos;
    if (dr == 0 && dj == 1) return 0;
    if (dr == 1 && dj == 0) return 1;
    if (dr == 1 && dj == 1) return 2;
    return -1;
}

}  // namespace

bool segment_on_boundary(const GridSegment& s, int n) {
    switch (segment_kind(s)) {
        case 0: return s.a.row == n;      // bottom edge
        case 1: return s.a.pos == 0;      // left edge
        case 2: return s.a.pos == s.a.row;  // right edge
        default: throw ValidationError("not a unit lattice segment");
    }
}

std::vector<GridSegment> interior_segments(int n) {
    std::vector<GridSegment> out;
    for (int row = 0; row <= n; ++row)
        for (int pos = 0; pos <= row; ++pos) {
            const Vertex v{row, pos};
            if (row <= n - 1 && pos >= 1)
                out.push_back(GridSegment{v, Vertex{row + 1, pos}});
            if (row <= n - 1 && pos <= row - 1)
                out.push_back(GridSegment{v, Vertex{row + 1, pos + 1}});
            if (pos <= row - 1 && row <= n - 1)
                out.push_back(GridSegment{v, Vertex{row, pos + 1}});
        }
    std::sort(out.begin(), out.end());
    return out;
}

SegmentCells segment_cells(const GridSegment& s, int n) {
    const int row = s.a.row;
    const int pos = s.a.pos;
    if (segment_on_boundary(s, n))
        throw ValidationError("boundary segment separates no cell pair");
    switch (segment_kind(s)) {
        case 0: return SegmentCells{UpCell{row - 1, pos}, DownCell{row, pos}};
        case 1: return SegmentCells{UpCell{row, pos}, DownCell{row, pos - 1}};
        default: return SegmentCells{UpCell{row, pos}, DownCell{row, pos}};
    }
}

GridSegment segment_between(const UpCell& u, const DownCell& d) {
    if (u == UpCell{d.r - 1, d.i})
        return GridSegment{Vertex{d.r, d.i}, Vertex{d.r, d.i + 1}};
    if (u == UpCell{d.r, d.i})
        return GridSegment{Vertex{d.r, d.i}, Vertex{d.r + 1, d.i + 1}};
    if (u == UpCell{d.r, d.i + 1})
        return GridSegment{Vertex{d.r, d.i + 1}, Vertex{d.r + 1, d.i + 1}};
    throw ValidationError("cells share no edge");
}

std::vector<GridSegment> triangle_boundary_segments(const SubTriangle& t, int n) {
    std::vector<GridSegment> out;
    for (int s = 0; s < t.k; ++s) {
        const GridSegment left{Vertex{t.r + s, t.i}, Vertex{t.r + s + 1, t.i}};
        const GridSegment right{Vertex{t.r + s, t.i + s}, Vertex{t.r + s + 1, t.i + s + 1}};
        const GridSegment bottom{Vertex{t.r + t.k, t.i + s}, Vertex{t.r + t.k, t.i + s + 1}};
        for (const GridSegment& seg : {left, right, bottom})
            if (!segment_on_boundary(seg, n)) out.push_back(seg);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Segments drawn by this particular tiling: those whose two cells belong to
// different pieces of the subdivision (hole boundaries included).
std::set<GridSegment> present_segments(const Tiling& t) {
    const int n = t.arrangement.n;
    std::set<GridSegment> out;
    for (const GridSegment& s : interior_segments(n)) {
        const SegmentCells sc = segment_cells(s, n);
        const int hu = hole_index(t.arrangement, sc.up);
        const int hd = hole_index(t.arrangement, sc.down);
        if (hu >= 0 && hd >= 0) {
            if (hu != hd) out.insert(s);
            continue;
        }
        if (hu >= 0 || hd >= 0) {
            out.insert(s);
            continue;
        }
        const auto it = t.rhombi.find(sc.down);
        if (it != t.rhombi.end() && up_neighbor(sc.down, it->second) == sc.up) continue;
        out.insert(s);
    }
    return out;
}

}  // namespace

ForcedReport forced_segments_scc(const Tiling& t) {
    const TilingCheck check = validate_tiling(t);
    if (!check.ok) throw ValidationError(check.message);
    const RegionGraph g = build_region_graph(t);
    const SccPartition p = strongly_connected_components(g);
    ForcedReport rep{ForcedMethod::Scc, {}};
    for (const GridSegment& s : interior_segments(t.arrangement.n)) {
        const SegmentCells sc = segment_cells(s, t.arrangement.n);
        const RegionId ru = g.up_region.at(sc.up);
        const RegionId rd = g.down_region.at(sc.down);
        if (ru == rd) continue;
        if (p.component_of.at(ru) != p.component_of.at(rd)) rep.segments.insert(s);
    }
    return rep;
}

ForcedReport forced_segments_procedure(const HoleArrangement& arr) {
    validate_arrangement(arr);
    const int n = arr.n;
    ForcedReport rep{ForcedMethod::Procedure, {}};

    // Saturated triangles split the board: no rhombus crosses them, so the
    // interior part of their outline is always drawn, except where a hole
    // pokes through the boundary.
    for (const SubTriangle& t : saturated_triangles(arr))
        for (const GridSegment& s : triangle_boundary_segments(t, n)) {
            const SegmentCells sc = segment_cells(s, n);
            const int hu = hole_index(arr, sc.up);
            if (hu >= 0 && hu == hole_index(arr, sc.down)) continue;
            rep.segments.insert(s);
        }

    // Unit propagation: a free cell whose partners are all cut off but one
    // is paired the same way in every tiling; its rhombus outline is then
    // always drawn, cutting further.
    std::set<UpCell> up_done;
    std::set<DownCell> down_done;
    const auto place = [&](const DownCell& d, Dir dir) {
        const UpCell u = up_neighbor(d, dir);
        up_done.insert(u);
        down_done.insert(d);
        const GridSegment shared = segment_between(u, d);
        std::set<GridSegment> outline;
        for (const Vertex& a : up_cell_vertices(u))
            for (const Vertex& b : up_cell_vertices(u))
                if (segment_kind(make_segment(a, b)) >= 0) outline.insert(make_segment(a, b));
        for (const Vertex& a : down_cell_vertices(d))
            for (const Vertex& b : down_cell_vertices(d))
                if (segment_kind(make_segment(a, b)) >= 0) outline.insert(make_segment(a, b));
        for (const GridSegment& s : outline)
            if (s != shared && !segment_on_boundary(s, n)) rep.segments.insert(s);
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (int r = 1; r <= n - 1; ++r)
            for (int i = 0; i < r; ++i) {
                const DownCell d{r, i};
                if (down_done.count(d) || in_some_hole(arr, d)) continue;
                std::optional<Dir> only;
                int options = 0;
                for (Dir dir : {Dir::N, Dir::W, Dir::E}) {
                    const UpCell u = up_neighbor(d, dir);
                    if (in_some_hole(arr, u) || up_done.count(u)) continue;
                    if (rep.segments.count(segment_between(u, d))) continue;
                    ++options;
                    only = dir;
                }
                if (options == 0)
                    throw ValidationError("a cell ran out of partners; no tiling exists");
                if (options == 1) {
                    place(d, *only);
                    progress = true;
                }
            }
        for (int r = 0; r < n; ++r)
            for (int i = 0; i <= r; ++i) {
                const UpCell u{r, i};
                if (up_done.count(u) || in_some_hole(arr, u)) continue;
                std::optional<DownCell> only;
                std::optional<Dir> only_dir;
                int options = 0;
                for (Side side : {Side::Left, Side::Right, Side::Below}) {
                    const auto d = down_neighbor(u, side, n);
                    if (!d || down_done.count(*d) || in_some_hole(arr, *d)) continue;
                    if (rep.segments.count(segment_between(u, *d))) continue;
                    ++options;
                    only = *d;
                    for (Dir dir : {Dir::N, Dir::W, Dir::E})
                        if (up_neighbor(*d, dir) == u) only_dir = dir;
                }
                if (options == 0)
                    throw ValidationError("a cell ran out of partners; no tiling exists");
                if (options == 1) {
                    place(*only, *only_dir);
                    progress = true;
                }
            }
    }
    return rep;
}

ForcedReport forced_segments_oracle(const HoleArrangement& arr) {
    ForcedReport rep{ForcedMethod::Oracle, {}};
    bool first = true;
    for_each_tiling(arr, [&](const Tiling& t) {
        const std::set<GridSegment> present = present_segments(t);
        if (first) {
            rep.segments = present;
            first = false;
        } else {
            std::set<GridSegment> keep;
            std::set_intersection(rep.segments.begin(), rep.segments.end(),
                                  present.begin(), present.end(),
                                  std::inserter(keep, keep.begin()));
            rep.segments = std::move(keep);
        }
        return !rep.segments.empty();
    });
    if (first) throw ValidationError("arrangement has no tiling");
    return rep;
}

}  // namespace tritile
