#include "tritile/arrangement.hpp"

#include <algorithm>
#include <string>

#include "tritile/errors.hpp"

namespace tritile {

namespace {

std::string tri_str(const SubTriangle& t) {
    return "(" + std::to_string(t.r) + "," + std::to_string(t.i) + "," +
           std::to_string(t.k) + ")";
}

// Hole side clipped to T, zero when they miss each other.
int clipped_size(const SubTriangle& hole, const SubTriangle& t, int n) {
    const auto cap = intersect(hole, t, n);
    return cap ? std::max(0, cap->k) : 0;
}

// Unit-hole counts inside sub-triangles in O(1): with the barycentric cell
// coordinates x = i, y = r - i, z = n - 1 - r, a sub-triangle is exactly
// {x >= A, y >= B, z >= C}.  Complementing, any two of x < A, y < B, z < C
// cut out a plain box in two of the coordinates and all three together are
// unsatisfiable (the coordinates sum to n - 1), so one inclusion-exclusion
// over three 2-d prefix tables answers every query.
struct TriPrefix {
    int n;
    int total = 0;
    std::vector<std::vector<int>> xy, xz, yz;  // [a][b] = holes with both <= a, <= b

    explicit TriPrefix(const HoleArrangement& arr) : n(arr.n) {
        const std::size_t m = static_cast<std::size_t>(n);
        xy.assign(m, std::vector<int>(m, 0));
        xz.assign(m, std::vector<int>(m, 0));
        yz.assign(m, std::vector<int>(m, 0));
        for (const SubTriangle& h : arr.holes) {
            const std::size_t x = static_cast<std::size_t>(h.i);
            const std::size_t y = static_cast<std::size_t>(h.r - h.i);
            const std::size_t z = static_cast<std::size_t>(n - 1 - h.r);
            ++xy[x][y];
            ++xz[x][z];
            ++yz[y][z];
            ++total;
        }
        for (auto* table : {&xy, &xz, &yz})
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) {
                    if (a) (*table)[a][b] += (*table)[a - 1][b];
                    if (b) (*table)[a][b] += (*table)[a][b - 1];
                    if (a && b) (*table)[a][b] -= (*table)[a - 1][b - 1];
                }
    }

    int inside(const SubTriangle& t) const {
        const int a = t.i, b = t.r - t.i, c = n - t.r - t.k;
        const auto box = [this](const std::vector<std::vector<int>>& table, int p, int q) {
            if (p < 0 || q < 0) return 0;
            return table[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
        };
        return total - box(xy, a - 1, n - 1) - box(yz, b - 1, n - 1) -
               box(xz, n - 1, c - 1) + box(xy, a - 1, b - 1) + box(xz, a - 1, c - 1) +
               box(yz, b - 1, c - 1);
    }
};

}  // namespace

void validate_arrangement(const HoleArrangement& arr) {
    if (arr.n < 1) throw ValidationError("triangle side must be at least 1");
    int total = 0;
    for (const SubTriangle& h : arr.holes) {
        if (!tri_valid(h, arr.n))
            throw ValidationError("hole " + tri_str(h) + " is not a valid sub-triangle");
        total += h.k;
    }
    if (total != arr.n)
        throw ValidationError("hole sides sum to " + std::to_string(total) +
                              ", expected " + std::to_string(arr.n));
    for (std::size_t a = 0; a < arr.holes.size(); ++a)
        for (std::size_t b = a + 1; b < arr.holes.size(); ++b) {
            const auto cap = intersect(arr.holes[a], arr.holes[b], arr.n);
            if (cap && cap->k > 0)
                throw ValidationError("holes " + tri_str(arr.holes[a]) + " and " +
                                      tri_str(arr.holes[b]) + " overlap");
        }
    if (!std::is_sorted(arr.holes.begin(), arr.holes.end()))
        throw ValidationError("holes are not sorted");
}

HoleArrangement make_arrangement(int n, std::vector<SubTriangle> holes) {
    std::sort(holes.begin(), holes.end());
    HoleArrangement arr{n, std::move(holes)};
    validate_arrangement(arr);
    return arr;
}

bool unit_holes_only(const HoleArrangement& arr) {
    return std::all_of(arr.holes.begin(), arr.holes.end(),
                       [](const SubTriangle& h) { return h.k == 1; });
}

HoleArrangement unitize(const HoleArrangement& arr) {
    std::vector<SubTriangle> units;
    units.reserve(static_cast<std::size_t>(arr.n));
    for (const SubTriangle& h : arr.holes)
        for (int t = 0; t < h.k; ++t)
            units.push_back(SubTriangle{h.r + h.k - 1, h.i + t, 1});
    return make_arrangement(arr.n, std::move(units));
}

SpreadOut is_spread_out(const HoleArrangement& arr) {
    if (unit_holes_only(arr)) {
        const TriPrefix counts(arr);
        for (int r = 0; r < arr.n; ++r)
            for (int i = 0; i <= r; ++i)
                for (int k = 1; r + k <= arr.n; ++k) {
                    const SubTriangle t{r, i, k};
                    if (counts.inside(t) > k) return SpreadOut{false, t};
                }
        return SpreadOut{true, std::nullopt};
    }
    for (const SubTriangle& t : enumerate_subtriangles(arr.n)) {
        int filled = 0;
        for (const SubTriangle& h : arr.holes) filled += clipped_size(h, t, arr.n);
        if (filled > t.k) return SpreadOut{false, t};
    }
    return SpreadOut{true, std::nullopt};
}

std::vector<SubTriangle> saturated_triangles(const HoleArrangement& arr) {
    std::vector<SubTriangle> out;
    if (unit_holes_only(arr)) {
        const TriPrefix counts(arr);
        for (const SubTriangle& t : enumerate_subtriangles(arr.n))
            if (counts.inside(t) == t.k) out.push_back(t);
        return out;
    }
    for (const SubTriangle& t : enumerate_subtriangles(arr.n)) {
        int filled = 0;
        for (const SubTriangle& h : arr.holes) filled += clipped_size(h, t, arr.n);
        if (filled == t.k) out.push_back(t);
    }
    return out;
}

MergeResult unique_by_merge(const HoleArrangement& arr) {
    MergeResult res;
    std::vector<SubTriangle> cur = arr.holes;
    for (;;) {
        bool merged = false;
        for (std::size_t a = 0; a < cur.size() && !merged; ++a)
            for (std::size_t b = a + 1; b < cur.size() && !merged; ++b) {
                const auto cap = intersect(cur[a], cur[b], arr.n);
                if (!cap || cap->k != 0) continue;
                const SubTriangle big = join(cur[a], cur[b], arr.n);
                res.steps.push_back(MergeStep{cur[a], cur[b], big});
                cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(b));
                cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(a));
                cur.insert(std::upper_bound(cur.begin(), cur.end(), big), big);
                merged = true;
            }
        if (!merged) break;
    }
    res.final_set = cur;
    res.unique = cur.size() == 1 && cur.front() == SubTriangle{0, 0, arr.n};
    return res;
}

}  // namespace tritile
