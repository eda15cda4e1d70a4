#include "tritile/tiling.hpp"

#include <algorithm>

#include "tritile/errors.hpp"

namespace tritile {

namespace {

std::string cell_str(const DownCell& d) {
    return "down(" + std::to_string(d.r) + "," + std::to_string(d.i) + ")";
}

std::string cell_str(const UpCell& u) {
    return "up(" + std::to_string(u.r) + "," + std::to_string(u.i) + ")";
}

int up_id(const UpCell& u) { return u.r * (u.r + 1) / 2 + u.i; }

std::vector<DownCell> all_down_cells(int n) {
    std::vector<DownCell> out;
    for (int r = 1; r < n; ++r)
        for (int i = 0; i < r; ++i) out.push_back(DownCell{r, i});
    return out;
}

}  // namespace

bool in_some_hole(const HoleArrangement& arr, const UpCell& u) {
    return hole_index(arr, u) >= 0;
}

bool in_some_hole(const HoleArrangement& arr, const DownCell& d) {
    return hole_index(arr, d) >= 0;
}

int hole_index(const HoleArrangement& arr, const UpCell& u) {
    for (std::size_t j = 0; j < arr.holes.size(); ++j)
        if (contains_up(arr.holes[j], u)) return static_cast<int>(j);
    return -1;
}

int hole_index(const HoleArrangement& arr, const DownCell& d) {
    for (std::size_t j = 0; j < arr.holes.size(); ++j)
        if (contains_down(arr.holes[j], d)) return static_cast<int>(j);
    return -1;
}

std::optional<UpCell> matched_up(const Tiling& t, const DownCell& d) {
    const auto it = t.rhombi.find(d);
    if (it == t.rhombi.end()) return std::nullopt;
    return up_neighbor(d, it->second);
}

std::map<UpCell, DownCell> up_to_down(const Tiling& t) {
    std::map<UpCell, DownCell> out;
    for (const auto& [d, dir] : t.rhombi) out.emplace(up_neighbor(d, dir), d);
    return out;
}

TilingCheck validate_tiling(const Tiling& t) {
    const HoleArrangement& arr = t.arrangement;
    try {
        validate_arrangement(arr);
    } catch (const ValidationError& e) {
        return TilingCheck{false, e.what()};
    }
    std::vector<char> covered(static_cast<std::size_t>(up_id(UpCell{arr.n, 0})), 0);
    for (const auto& [d, dir] : t.rhombi) {
        if (!down_valid(d, arr.n))
            return TilingCheck{false, cell_str(d) + " is out of range"};
        if (in_some_hole(arr, d))
            return TilingCheck{false, cell_str(d) + " lies inside a hole"};
        const UpCell u = up_neighbor(d, dir);
        if (!up_valid(u, arr.n))
            return TilingCheck{false, cell_str(d) + " points past the boundary"};
        if (in_some_hole(arr, u))
            return TilingCheck{false, cell_str(d) + " pairs hole cell " + cell_str(u)};
        if (covered[static_cast<std::size_t>(up_id(u))])
            return TilingCheck{false, cell_str(u) + " is covered twice"};
        covered[static_cast<std::size_t>(up_id(u))] = 1;
    }
    for (const DownCell& d : all_down_cells(arr.n))
        if (!in_some_hole(arr, d) && !t.rhombi.count(d))
            return TilingCheck{false, cell_str(d) + " is not covered"};
    for (int r = 0; r < arr.n; ++r)
        for (int i = 0; i <= r; ++i) {
            const UpCell u{r, i};
            const bool hole = in_some_hole(arr, u);
            const bool cov = covered[static_cast<std::size_t>(up_id(u))] != 0;
            if (!hole && !cov)
                return TilingCheck{false, cell_str(u) + " is neither hole nor covered"};
            if (hole && cov)
                return TilingCheck{false, "hole cell " + cell_str(u) + " is covered"};
        }
    return TilingCheck{};
}

std::optional<Tiling> construct(const HoleArrangement& arr) {
    validate_arrangement(arr);
    const HoleArrangement units = unitize(arr);
    const int n = arr.n;
    const std::vector<DownCell> downs = all_down_cells(n);

    std::vector<char> is_hole(static_cast<std::size_t>(n * (n + 1) / 2), 0);
    for (const SubTriangle& h : units.holes)
        is_hole[static_cast<std::size_t>(up_id(UpCell{h.r, h.i}))] = 1;

    // Kuhn's augmenting paths, down cells row-major, neighbours N, W, E.
    std::vector<int> up_match(static_cast<std::size_t>(n * (n + 1) / 2), -1);
    std::vector<char> seen(up_match.size(), 0);
    auto try_augment = [&](auto&& self, int di) -> bool {
        const DownCell d = downs[static_cast<std::size_t>(di)];
        for (const Dir dir : {Dir::N, Dir::W, Dir::E}) {
            const UpCell u = up_neighbor(d, dir);
            if (!up_valid(u, n)) continue;
            const int ui = up_id(u);
            if (is_hole[static_cast<std::size_t>(ui)] || seen[static_cast<std::size_t>(ui)])
                continue;
            seen[static_cast<std::size_t>(ui)] = 1;
            if (up_match[static_cast<std::size_t>(ui)] < 0 ||
                self(self, up_match[static_cast<std::size_t>(ui)])) {
                up_match[static_cast<std::size_t>(ui)] = di;
                return true;
            }
        }
        return false;
    };
    for (std::size_t di = 0; di < downs.size(); ++di) {
        std::fill(seen.begin(), seen.end(), 0);
        if (!try_augment(try_augment, static_cast<int>(di))) return std::nullopt;
    }

    Tiling t{arr, {}};
    std::vector<int> down_match(downs.size(), -1);
    for (std::size_t ui = 0; ui < up_match.size(); ++ui)
        if (up_match[ui] >= 0) down_match[static_cast<std::size_t>(up_match[ui])] = static_cast<int>(ui);
    for (std::size_t di = 0; di < downs.size(); ++di) {
        const DownCell d = downs[di];
        if (in_some_hole(arr, d)) continue;
        for (const Dir dir : {Dir::N, Dir::W, Dir::E}) {
            const UpCell u = up_neighbor(d, dir);
            if (up_valid(u, n) && up_id(u) == down_match[di]) {
                t.rhombi.emplace(d, dir);
                break;
            }
        }
    }
    return t;
}

void for_each_tiling(const HoleArrangement& arr,
                     const std::function<bool(const Tiling&)>& visit) {
    validate_arrangement(arr);
    const int n = arr.n;
    std::vector<DownCell> downs;
    for (const DownCell& d : all_down_cells(n))
        if (!in_some_hole(arr, d)) downs.push_back(d);

    std::vector<char> used(static_cast<std::size_t>(n * (n + 1) / 2), 0);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= r; ++i)
            if (in_some_hole(arr, UpCell{r, i}))
                used[static_cast<std::size_t>(up_id(UpCell{r, i}))] = 1;

    std::vector<Dir> pick(downs.size(), Dir::N);
    bool stop = false;
    auto rec = [&](auto&& self, std::size_t at) -> void {
        if (stop) return;
        if (at == downs.size()) {
            Tiling t{arr, {}};
            for (std::size_t j = 0; j < downs.size(); ++j) t.rhombi.emplace(downs[j], pick[j]);
            if (!visit(t)) stop = true;
            return;
        }
        const DownCell d = downs[at];
        for (const Dir dir : {Dir::N, Dir::W, Dir::E}) {
            const UpCell u = up_neighbor(d, dir);
            if (!up_valid(u, n)) continue;
            const int ui = up_id(u);
            if (used[static_cast<std::size_t>(ui)]) continue;
            used[static_cast<std::size_t>(ui)] = 1;
            pick[at] = dir;
            self(self, at + 1);
            used[static_cast<std::size_t>(ui)] = 0;
            if (stop) return;
        }
    };
    rec(rec, 0);
}

std::vector<Tiling> enumerate_tilings(const HoleArrangement& arr, std::uint64_t limit) {
    std::vector<Tiling> out;
    for_each_tiling(arr, [&](const Tiling& t) {
        out.push_back(t);
        return out.size() < limit;
    });
    return out;
}

std::uint64_t count_tilings(const HoleArrangement& arr) {
    std::uint64_t c = 0;
    for_each_tiling(arr, [&](const Tiling&) {
        ++c;
        return true;
    });
    return c;
}

std::uint64_t count_tilings_at_most(const HoleArrangement& arr, std::uint64_t cap) {
    std::uint64_t c = 0;
    for_each_tiling(arr, [&](const Tiling&) {
        ++c;
        return c < cap;
    });
    return c;
}

Tiling unitize_tiling(const Tiling& t) {
    Tiling out{unitize(t.arrangement), t.rhombi};
    for (const SubTriangle& h : t.arrangement.holes)
        for (int row = 1; row < h.k; ++row)
            for (int s = 0; s < row; ++s)
                out.rhombi.emplace(DownCell{h.r + row, h.i + s}, Dir::N);
    return out;
}

std::string tiling_key(const Tiling& t) {
    std::string key = std::to_string(t.arrangement.n);
    for (const SubTriangle& h : t.arrangement.holes) {
        key += '|';
        key += std::to_string(h.r) + "," + std::to_string(h.i) + "," + std::to_string(h.k);
    }
    key += '#';
    for (const auto& [d, dir] : t.rhombi) {
        key += std::to_string(d.r) + "," + std::to_string(d.i);
        key += "NWE"[static_cast<int>(dir)];
        key += ';';
    }
    return key;
}

}  // namespace tritile
