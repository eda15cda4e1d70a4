#include "tritile/gd_flip.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "tritile/errors.hpp"

namespace tritile {

std::vector<std::pair<DownCell, Dir>> ring_pattern(const GdFrame& gd, Rotation which) {
    const int R = gd.frame.r;
    const int I = gd.frame.i;
    const int m = gd.interior_size();
    std::vector<std::pair<DownCell, Dir>> out;
    out.reserve(static_cast<std::size_t>(3 * (m + 1)));
    if (which == Rotation::CW) {
        out.emplace_back(DownCell{R + 1, I}, Dir::E);
        for (int t = 2; t <= m + 2; ++t) out.emplace_back(DownCell{R + t, I}, Dir::N);
        for (int t = 2; t <= m + 1; ++t)
            out.emplace_back(DownCell{R + t, I + t - 1}, Dir::E);
        for (int j = 1; j <= m + 1; ++j)
            out.emplace_back(DownCell{R + m + 2, I + j}, Dir::W);
    } else {
        for (int t = 1; t <= m + 1; ++t) out.emplace_back(DownCell{R + t, I}, Dir::W);
        for (int t = 2; t <= m + 2; ++t)
            out.emplace_back(DownCell{R + t, I + t - 1}, Dir::N);
        for (int j = 0; j <= m; ++j)
            out.emplace_back(DownCell{R + m + 2, I + j}, Dir::E);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool matches_pattern(const Tiling& t, const std::vector<std::pair<DownCell, Dir>>& pat) {
    for (const auto& [d, dir] : pat) {
        const auto it = t.rhombi.find(d);
        if (it == t.rhombi.end() || it->second != dir) return false;
    }
    return true;
}

std::vector<GdFrame> find_gds(const Tiling& t, Rotation which) {
    const int n = t.arrangement.n;
    std::vector<GdFrame> out;
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= r; ++i)
            for (int k = 3; r + k <= n; ++k) {
                const GdFrame gd{SubTriangle{r, i, k}};
                if (matches_pattern(t, ring_pattern(gd, which))) out.push_back(gd);
            }
    return out;
}

Tiling flip(const Tiling& t, const GdFrame& gd, Rotation from, Rotation to) {
    if (!tri_valid(gd.frame, t.arrangement.n) || gd.frame.k < 3)
        throw FlipError("frame does not fit the triangle");
    if (!matches_pattern(t, ring_pattern(gd, from)))
        throw FlipError("ring rhombi do not match at frame (" +
                        std::to_string(gd.frame.r) + "," + std::to_string(gd.frame.i) +
                        "," + std::to_string(gd.frame.k) + ")");
    Tiling out = t;
    for (const auto& [d, dir] : ring_pattern(gd, to)) out.rhombi[d] = dir;
    return out;
}

}  // namespace

std::vector<GdFrame> find_cw_gds(const Tiling& t) { return find_gds(t, Rotation::CW); }
std::vector<GdFrame> find_ccw_gds(const Tiling& t) { return find_gds(t, Rotation::CCW); }

Tiling apply_gd_flip(const Tiling& t, const GdFrame& gd) {
    return flip(t, gd, Rotation::CW, Rotation::CCW);
}

Tiling apply_gd_flip_inverse(const Tiling& t, const GdFrame& gd) {
    return flip(t, gd, Rotation::CCW, Rotation::CW);
}

int vertical_rhombus_count(const Tiling& t) {
    int count = 0;
    for (const auto& [d, dir] : t.rhombi) count += dir == Dir::N ? 1 : 0;
    return count;
}

long long potential(const Tiling& t) {
    // Doubled x of a vertical rhombus centre at down cell (r, i) is 2i+1-r.
    long long sum = 0;
    for (const auto& [d, dir] : t.rhombi)
        if (dir == Dir::N) sum += 2 * d.i + 1 - d.r;
    return sum;
}

CanonicalizeResult canonicalize(const Tiling& t, CanonicalTarget target) {
    CanonicalizeResult res{t, 0};
    const int n = t.arrangement.n;
    const int guard = 2 * n * n * n + 16;
    for (int iter = 0; iter <= guard; ++iter) {
        const std::vector<GdFrame> found = target == CanonicalTarget::NoCw
                                               ? find_cw_gds(res.tiling)
                                               : find_ccw_gds(res.tiling);
        if (found.empty()) return res;
        res.tiling = target == CanonicalTarget::NoCw
                         ? apply_gd_flip(res.tiling, found.front())
                         : apply_gd_flip_inverse(res.tiling, found.front());
        ++res.flips;
    }
    throw ResourceLimitError("canonicalization did not terminate");
}

bool gd_connected(const HoleArrangement& arr) {
    const std::vector<Tiling> all = enumerate_tilings(arr);
    if (all.size() <= 1) return true;
    std::map<std::string, std::size_t> index;
    for (std::size_t j = 0; j < all.size(); ++j) index.emplace(tiling_key(all[j]), j);

    std::vector<std::size_t> parent(all.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Tiling& t : all)
        for (const GdFrame& gd : find_cw_gds(t)) {
            const Tiling flipped = apply_gd_flip(t, gd);
            const std::size_t a = find(index.at(tiling_key(t)));
            const std::size_t b = find(index.at(tiling_key(flipped)));
            parent[a] = b;
        }
    const std::size_t root = find(0);
    for (std::size_t j = 1; j < all.size(); ++j)
        if (find(j) != root) return false;
    return true;
}

}  // namespace tritile
