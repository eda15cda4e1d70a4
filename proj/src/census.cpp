#include "tritile/census.hpp"

#include <future>
#include <thread>

#include "tritile/errors.hpp"
#include "tritile/tiling.hpp"

namespace tritile {

namespace {

struct Partial {
    std::uint64_t candidates = 0;
    std::uint64_t spread_out = 0;
    std::uint64_t uniquely_tileable = 0;
    std::map<std::uint64_t, std::uint64_t> hist;
};

// All hole subsets whose lexicographically first cell is `first`.
Partial census_chunk(int n, const std::vector<UpCell>& cell_of, int first) {
    Partial p;
    const int cells = static_cast<int>(cell_of.size());
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) idx[static_cast<std::size_t>(t)] = first + t;
    if (idx.back() >= cells) return p;
    while (true) {
        std::vector<SubTriangle> holes;
        holes.reserve(static_cast<std::size_t>(n));
        for (int id : idx) {
            const UpCell u = cell_of[static_cast<std::size_t>(id)];
            holes.push_back(SubTriangle{u.r, u.i, 1});
        }
        const HoleArrangement arr{n, std::move(holes)};  // already sorted
        ++p.candidates;
        if (is_spread_out(arr).ok) ++p.spread_out;
        const std::uint64_t count = count_tilings(arr);
        if (count == 1) ++p.uniquely_tileable;
        ++p.hist[count];

        int t = n - 1;
        while (t >= 1 && idx[static_cast<std::size_t>(t)] == cells - n + t) --t;
        if (t < 1) break;
        ++idx[static_cast<std::size_t>(t)];
        for (int s = t + 1; s < n; ++s)
            idx[static_cast<std::size_t>(s)] = idx[static_cast<std::size_t>(s - 1)] + 1;
    }
    return p;
}

}  // namespace

CensusReport census(int n, int threads) {
    if (n < 1) throw ValidationError("triangle size must be positive");
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    const int cells = n * (n + 1) / 2;
    std::vector<UpCell> cell_of;
    cell_of.reserve(static_cast<std::size_t>(cells));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= r; ++i) cell_of.push_back(UpCell{r, i});

    CensusReport rep;
    rep.n = n;
    const auto merge = [&rep](const Partial& p) {
        rep.candidates += p.candidates;
        rep.spread_out += p.spread_out;
        rep.uniquely_tileable += p.uniquely_tileable;
        for (const auto& [count, arrangements] : p.hist)
            rep.tiling_histogram[count] += arrangements;
    };

    const int chunks = cells - n + 1;
    for (int start = 0; start < chunks; start += threads) {
        std::vector<std::future<Partial>> wave;
        for (int c = start; c < std::min(start + threads, chunks); ++c)
            wave.push_back(std::async(std::launch::async, census_chunk, n,
                                      std::cref(cell_of), c));
        for (auto& fut : wave) merge(fut.get());
    }
    return rep;
}

}  // namespace tritile
