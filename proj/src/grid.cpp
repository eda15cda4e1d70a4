#include "tritile/grid.hpp"

#include "tritile/errors.hpp"

namespace tritile {

bool up_valid(const UpCell& u, int n) {
    return 0 <= u.i && u.i <= u.r && u.r < n;
}

bool down_valid(const DownCell& d, int n) {
    return 1 <= d.r && d.r <= n - 1 && 0 <= d.i && d.i <= d.r - 1;
}

bool vertex_valid(const Vertex& v, int n) {
    return 0 <= v.pos && v.pos <= v.row && v.row <= n;
}

bool tri_valid(const SubTriangle& t, int n) {
    return t.k >= 1 && 0 <= t.i && t.i <= t.r && t.r + t.k <= n;
}

UpCell up_neighbor(const DownCell& d, Dir dir) {
    switch (dir) {
        case Dir::N: return UpCell{d.r - 1, d.i};
        case Dir::W: return UpCell{d.r, d.i};
        case Dir::E: return UpCell{d.r, d.i + 1};
    }
    return UpCell{};
}

std::array<UpCell, 3> up_neighbors(const DownCell& d) {
    return {up_neighbor(d, Dir::N), up_neighbor(d, Dir::W), up_neighbor(d, Dir::E)};
}

std::optional<DownCell> down_neighbor(const UpCell& u, Side side, int n) {
    DownCell d;
    switch (side) {
        case Side::Left: d = DownCell{u.r, u.i - 1}; break;
        case Side::Right: d = DownCell{u.r, u.i}; break;
        case Side::Below: d = DownCell{u.r + 1, u.i}; break;
    }
    if (!down_valid(d, n)) return std::nullopt;
    return d;
}

std::array<std::optional<DownCell>, 3> down_neighbors(const UpCell& u, int n) {
    return {down_neighbor(u, Side::Left, n), down_neighbor(u, Side::Right, n),
            down_neighbor(u, Side::Below, n)};
}

std::array<Vertex, 3> up_cell_vertices(const UpCell& u) {
    return {Vertex{u.r, u.i}, Vertex{u.r + 1, u.i}, Vertex{u.r + 1, u.i + 1}};
}

std::array<Vertex, 3> down_cell_vertices(const DownCell& d) {
    return {Vertex{d.r, d.i}, Vertex{d.r, d.i + 1}, Vertex{d.r + 1, d.i + 1}};
}

std::array<Vertex, 3> corner_vertices(const SubTriangle& t) {
    return {Vertex{t.r, t.i}, Vertex{t.r + t.k, t.i}, Vertex{t.r + t.k, t.i + t.k}};
}

TriDistances distances(const SubTriangle& t, int n) {
    return TriDistances{t.i, t.r - t.i, n - t.r - t.k};
}

SubTriangle from_distances(const TriDistances& d, int n) {
    const int r = d.left + d.right;
    return SubTriangle{r, d.left, n - r - d.bottom};
}

std::optional<SubTriangle> intersect(const SubTriangle& a, const SubTriangle& b, int n) {
    const TriDistances da = distances(a, n);
    const TriDistances db = distances(b, n);
    const TriDistances dm{std::max(da.left, db.left), std::max(da.right, db.right),
                          std::max(da.bottom, db.bottom)};
    const SubTriangle t = from_distances(dm, n);
    if (t.k < 0) return std::nullopt;
    return t;
}

SubTriangle join(const SubTriangle& a, const SubTriangle& b, int n) {
    const TriDistances da = distances(a, n);
    const TriDistances db = distances(b, n);
    const TriDistances dm{std::min(da.left, db.left), std::min(da.right, db.right),
                          std::min(da.bottom, db.bottom)};
    return from_distances(dm, n);
}

bool contains(const SubTriangle& outer, const SubTriangle& inner, int n) {
    const TriDistances a = distances(outer, n);
    const TriDistances b = distances(inner, n);
    return b.left >= a.left && b.right >= a.right && b.bottom >= a.bottom;
}

bool contains_up(const SubTriangle& t, const UpCell& u) {
    return t.r <= u.r && u.r <= t.r + t.k - 1 && t.i <= u.i && u.i <= t.i + (u.r - t.r);
}

bool contains_down(const SubTriangle& t, const DownCell& d) {
    return t.r + 1 <= d.r && d.r <= t.r + t.k - 1 && t.i <= d.i &&
           d.i <= t.i + (d.r - t.r) - 1;
}

std::vector<SubTriangle> enumerate_subtriangles(int n) {
    std::vector<SubTriangle> out;
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= r; ++i)
            for (int k = 1; r + k <= n; ++k) out.push_back(SubTriangle{r, i, k});
    return out;
}

Rotation orientation_xy(const std::vector<std::pair<long long, long long>>& points) {
    long long sum = 0;
    const std::size_t m = points.size();
    for (std::size_t a = 0; a < m; ++a) {
        const std::size_t b = (a + 1) % m;
        sum += points[a].first * points[b].second - points[b].first * points[a].second;
    }
    if (sum == 0) throw ValidationError("degenerate polygon has no orientation");
    return sum > 0 ? Rotation::CW : Rotation::CCW;
}

Rotation orientation(const std::vector<Vertex>& points) {
    std::vector<std::pair<long long, long long>> xy;
    xy.reserve(points.size());
    for (const Vertex& v : points) xy.emplace_back(embed_x(v), embed_y(v));
    return orientation_xy(xy);
}

const char* compass_name(Compass c) {
    switch (c) {
        case Compass::E: return "e";
        case Compass::W: return "w";
        case Compass::NE: return "ne";
        case Compass::NW: return "nw";
        case Compass::SE: return "se";
        case Compass::SW: return "sw";
    }
    return "?";
}

std::optional<Compass> compass_from_name(std::string_view s) {
    if (s == "e") return Compass::E;
    if (s == "w") return Compass::W;
    if (s == "ne") return Compass::NE;
    if (s == "nw") return Compass::NW;
    if (s == "se") return Compass::SE;
    if (s == "sw") return Compass::SW;
    return std::nullopt;
}

}  // namespace tritile
