#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace tritile {

// The side-n equilateral triangle is cut into n*n unit cells: n*(n+1)/2
// pointing up, n*(n-1)/2 pointing down.  Rows are counted from the apex,
// positions from the left.

// Upward unit cell: 0 <= i <= r < n.
struct UpCell {
    int r = 0;
    int i = 0;
    auto operator<=>(const UpCell&) const = default;
};

// Downward unit cell wedged between UpCell(r, i) and UpCell(r, i+1):
// 1 <= r <= n-1, 0 <= i <= r-1.
struct DownCell {
    int r = 0;
    int i = 0;
    auto operator<=>(const DownCell&) const = default;
};

// Lattice vertex: 0 <= pos <= row <= n.
struct Vertex {
    int row = 0;
    int pos = 0;
    auto operator<=>(const Vertex&) const = default;
};

// Upward sub-triangle of side k with apex cell at (r, i).  k == 0 is a
// degenerate single point; it only arises as an intersection result.
struct SubTriangle {
    int r = 0;
    int i = 0;
    int k = 0;
    auto operator<=>(const SubTriangle&) const = default;
};

bool up_valid(const UpCell&, int n);
bool down_valid(const DownCell&, int n);
bool vertex_valid(const Vertex&, int n);
bool tri_valid(const SubTriangle&, int n);

// Integer plane embedding, y growing downward: x = 2*pos - row, y = row.
// One unit cell edge spans 2 in x or 1 in both x and y.
inline int embed_x(const Vertex& v) { return 2 * v.pos - v.row; }
inline int embed_y(const Vertex& v) { return v.row; }

// Which of its three up neighbours a down cell is paired with.  N is the
// cell directly above (the pairing with no horizontal edge, the "vertical"
// rhombus); W and E are the cells to its left and right in the same row.
enum class Dir : std::uint8_t { N = 0, W = 1, E = 2 };

UpCell up_neighbor(const DownCell&, Dir);
std::array<UpCell, 3> up_neighbors(const DownCell&);  // N, W, E order

// Down cells sharing an edge with an up cell.  A neighbour beyond the
// boundary of the size-n triangle is reported as nullopt.
enum class Side : std::uint8_t { Left = 0, Right = 1, Below = 2 };
std::optional<DownCell> down_neighbor(const UpCell&, Side, int n);
std::array<std::optional<DownCell>, 3> down_neighbors(const UpCell&, int n);

std::array<Vertex, 3> up_cell_vertices(const UpCell&);    // apex, bl, br
std::array<Vertex, 3> down_cell_vertices(const DownCell&);  // tl, tr, bottom
std::array<Vertex, 3> corner_vertices(const SubTriangle&);  // apex, bl, br

// Distances from the three sides of the ambient triangle; they always sum
// to n - k, and a sub-triangle is valid iff all three are >= 0.
struct TriDistances {
    int left = 0;
    int right = 0;
    int bottom = 0;
};
TriDistances distances(const SubTriangle&, int n);
SubTriangle from_distances(const TriDistances&, int n);

// Largest upward triangle inside both: componentwise max of distances.
// nullopt when the triangles are disjoint; k == 0 means they touch in a
// single point.
std::optional<SubTriangle> intersect(const SubTriangle&, const SubTriangle&, int n);

// Smallest upward triangle containing both: componentwise min of distances.
SubTriangle join(const SubTriangle&, const SubTriangle&, int n);

bool contains(const SubTriangle& outer, const SubTriangle& inner, int n);
bool contains_up(const SubTriangle&, const UpCell&);
bool contains_down(const SubTriangle&, const DownCell&);

// All sub-triangles with k >= 1, ordered by (r, i, k).
std::vector<SubTriangle> enumerate_subtriangles(int n);

enum class Rotation : std::uint8_t { CW, CCW };

// The six lattice directions of the embedding, used both for rays along
// which depth is measured and for the travel direction of a moving hole.
enum class Compass : std::uint8_t { E = 0, W = 1, NE = 2, NW = 3, SE = 4, SW = 5 };

const char* compass_name(Compass);                     // "e", "w", "ne", ...
std::optional<Compass> compass_from_name(std::string_view);

// Orientation of a simple closed polygon given in the y-down embedding.
// Positive shoelace sum reads as clockwise on screen.  Throws
// ValidationError on a degenerate (zero-area) polygon.
Rotation orientation_xy(const std::vector<std::pair<long long, long long>>& points);
Rotation orientation(const std::vector<Vertex>& points);

}  // namespace tritile
