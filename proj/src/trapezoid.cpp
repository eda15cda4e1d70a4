#include "tritile/trapezoid.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "tritile/errors.hpp"

namespace tritile {

namespace {

// Which up neighbour of d the cell u is, if any.
std::optional<Dir> dir_of(const DownCell& d, const UpCell& u) {
    for (Dir dir : {Dir::N, Dir::W, Dir::E})
        if (up_neighbor(d, dir) == u) return dir;
    return std::nullopt;
}

bool is_unit_hole(const HoleArrangement& arr, const UpCell& u) {
    const int idx = hole_index(arr, u);
    return idx >= 0 && arr.holes[static_cast<std::size_t>(idx)].k == 1;
}

}  // namespace

Compass flip_direction(const TrapezoidFlip& f) {
    const UpCell h = f.hole;
    if (f.through == DownCell{h.r, h.i}) {  // right side
        if (f.landing == UpCell{h.r, h.i + 1}) return Compass::E;
        if (f.landing == UpCell{h.r - 1, h.i}) return Compass::NE;
    } else if (f.through == DownCell{h.r + 1, h.i}) {  // below
        if (f.landing == UpCell{h.r + 1, h.i}) return Compass::SW;
        if (f.landing == UpCell{h.r + 1, h.i + 1}) return Compass::SE;
    } else if (f.through == DownCell{h.r, h.i - 1}) {  // left side
        if (f.landing == UpCell{h.r, h.i - 1}) return Compass::W;
        if (f.landing == UpCell{h.r - 1, h.i - 1}) return Compass::NW;
    }
    throw ValidationError("cells of the flip are not in a trapezoid position");
}

std::vector<TrapezoidFlip> list_trapezoid_flips(const Tiling& t) {
    std::vector<TrapezoidFlip> out;
    for (const SubTriangle& h : t.arrangement.holes) {
        if (h.k != 1)
            throw ValidationError("trapezoid flips need unit holes; unitize the tiling first");
        const UpCell hole{h.r, h.i};
        for (Side side : {Side::Left, Side::Right, Side::Below}) {
            const auto d = down_neighbor(hole, side, t.arrangement.n);
            if (!d) continue;
            const auto it = t.rhombi.find(*d);
            if (it == t.rhombi.end()) continue;  // malformed tiling, stay lenient
            out.push_back(TrapezoidFlip{hole, *d, up_neighbor(*d, it->second)});
        }
    }
    return out;
}

Tiling apply_trapezoid_flip(const Tiling& t, const TrapezoidFlip& f) {
    if (!is_unit_hole(t.arrangement, f.hole))
        throw FlipError("flip source is not a unit hole");
    const auto it = t.rhombi.find(f.through);
    if (it == t.rhombi.end()) throw FlipError("flip crosses a hole, not a rhombus");
    if (up_neighbor(f.through, it->second) != f.landing)
        throw FlipError("rhombus is paired away from the flip landing cell");
    const auto back = dir_of(f.through, f.hole);
    if (!back) throw FlipError("hole does not touch the flip rhombus");
    flip_direction(f);  // rejects non-trapezoid cell combinations

    Tiling out = t;
    for (SubTriangle& h : out.arrangement.holes)
        if (h == SubTriangle{f.hole.r, f.hole.i, 1}) {
            h = SubTriangle{f.landing.r, f.landing.i, 1};
            break;
        }
    std::sort(out.arrangement.holes.begin(), out.arrangement.holes.end());
    out.rhombi[f.through] = *back;
    return out;
}

Tiling apply_trapezoid_flip(const Tiling& t, const UpCell& hole, Compass c) {
    for (const TrapezoidFlip& f : list_trapezoid_flips(t))
        if (f.hole == hole && flip_direction(f) == c) return apply_trapezoid_flip(t, f);
    throw FlipError("no such trapezoid flip is available");
}

HeightVector heights(const UpCell& hole, int n) {
    return HeightVector{n - 1 - hole.r, hole.i, hole.r - hole.i};
}

namespace {

// Summed hole heights of both tilings along one axis.
void add_heights(const Tiling& t, long long& bottom, long long& left, long long& right) {
    for (const SubTriangle& h : t.arrangement.holes) {
        if (h.k != 1) throw ValidationError("distance bounds need unit holes");
        const HeightVector hv = heights(UpCell{h.r, h.i}, t.arrangement.n);
        bottom += hv.bottom;
        left += hv.left;
        right += hv.right;
    }
}

}  // namespace

int upper_bound_distance(const Tiling& t1, const Tiling& t2) {
    if (t1.arrangement.n != t2.arrangement.n)
        throw ValidationError("tilings live in triangles of different size");
    long long bottom = 0, left = 0, right = 0;
    add_heights(t1, bottom, left, right);
    add_heights(t2, bottom, left, right);
    return static_cast<int>(std::min({bottom, left, right}));
}

std::optional<int> flip_distance(const Tiling& t1, const Tiling& t2,
                                 std::uint64_t state_cap) {
    if (t1.arrangement.n != t2.arrangement.n)
        throw ValidationError("tilings live in triangles of different size");
    const std::string goal = tiling_key(t2);
    if (tiling_key(t1) == goal) return 0;
    std::unordered_map<std::string, int> dist;
    std::deque<std::pair<Tiling, int>> queue;
    dist.emplace(tiling_key(t1), 0);
    queue.emplace_back(t1, 0);
    while (!queue.empty()) {
        const auto [cur, d] = std::move(queue.front());
        queue.pop_front();
        for (const TrapezoidFlip& f : list_trapezoid_flips(cur)) {
            Tiling nxt = apply_trapezoid_flip(cur, f);
            std::string key = tiling_key(nxt);
            if (!dist.emplace(std::move(key), d + 1).second) continue;
            if (tiling_key(nxt) == goal) return d + 1;
            if (dist.size() > state_cap)
                throw ResourceLimitError("flip distance search exceeded the state cap");
            queue.emplace_back(std::move(nxt), d + 1);
        }
    }
    return std::nullopt;
}

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

// The corner of d lying in the residue class, with the pairing it dictates
// for each sweep.  Corner x coordinates are 2i-r, 2i-r+1, 2i-r+2 for the
// top-left, bottom and top-right vertices, so exactly one matches.
std::pair<Dir, Dir> class_pairing(const DownCell& d, int residue_class) {
    const int x = 2 * d.i - d.r;
    if (mod3(x) == residue_class) return {Dir::W, Dir::N};      // top-left corner
    if (mod3(x + 2) == residue_class) return {Dir::N, Dir::E};  // top-right corner
    return {Dir::E, Dir::W};                                    // bottom corner
}

// One sweep of the infinite hexagon tiling, clipped to the triangle.  Every
// down cell pairs around its class vertex; an up cell whose infinite partner
// falls outside the triangle is left over and becomes a unit hole, so the two
// sweeps generally produce different holes.
Tiling hexagon_sweep(int n, int residue_class, bool clockwise) {
    std::map<DownCell, Dir> rhombi;
    std::vector<bool> used(static_cast<std::size_t>(n) * (n + 1) / 2, false);
    const auto up_id = [](const UpCell& u) {
        return static_cast<std::size_t>(u.r) * (u.r + 1) / 2 + u.i;
    };
    for (int r = 1; r <= n - 1; ++r)
        for (int i = 0; i < r; ++i) {
            const DownCell d{r, i};
            const auto [dcw, dccw] = class_pairing(d, residue_class);
            const Dir dir = clockwise ? dcw : dccw;
            rhombi[d] = dir;
            used[up_id(up_neighbor(d, dir))] = true;
        }
    std::vector<SubTriangle> holes;
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= r; ++i)
            if (!used[up_id(UpCell{r, i})]) holes.push_back(SubTriangle{r, i, 1});
    Tiling t{make_arrangement(n, holes), std::move(rhombi)};
    const TilingCheck check = validate_tiling(t);
    if (!check.ok) throw ValidationError("sweep produced a broken tiling: " + check.message);
    return t;
}

}  // namespace

std::pair<Tiling, Tiling> hexagon_pair(int n, int residue_class) {
    if (n < 1) throw ValidationError("triangle size must be positive");
    if (residue_class < 0 || residue_class > 2)
        throw ValidationError("residue class must be 0, 1 or 2");
    return {hexagon_sweep(n, residue_class, true), hexagon_sweep(n, residue_class, false)};
}

int full_hexagon_count(int n, int residue_class) {
    int count = 0;
    for (int row = 1; row <= n - 1; ++row)
        for (int pos = 1; pos <= row - 1; ++pos)
            if (mod3(2 * pos - row) == residue_class) ++count;
    return count;
}

}  // namespace tritile
