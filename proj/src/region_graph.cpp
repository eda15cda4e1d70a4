#include "tritile/region_graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "tritile/errors.hpp"

namespace tritile {

namespace {

int node_index(const std::vector<RegionId>& nodes, const RegionId& id) {
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
    if (it == nodes.end() || *it != id) return -1;
    return static_cast<int>(it - nodes.begin());
}

// Endpoints of the edge shared by a rhombus's two cells (its short diagonal).
std::array<Vertex, 2> shared_edge(const DownCell& d, Dir dir) {
    switch (dir) {
        case Dir::N: return {Vertex{d.r, d.i}, Vertex{d.r, d.i + 1}};
        case Dir::W: return {Vertex{d.r, d.i}, Vertex{d.r + 1, d.i + 1}};
        case Dir::E: return {Vertex{d.r, d.i + 1}, Vertex{d.r + 1, d.i + 1}};
    }
    return {};
}

}  // namespace

std::string to_string(const RegionId& id) {
    switch (id.kind) {
        case RegionId::Kind::Hole: return "hole" + std::to_string(id.a);
        case RegionId::Kind::Rhombus:
            return "rh" + std::to_string(id.a) + "_" + std::to_string(id.b);
        case RegionId::Kind::Exterior: return "ext";
    }
    return "";
}

int RegionGraph::out_degree(const RegionId& id) const {
    int deg = 0;
    for (const auto& [from, to] : edges) deg += from == id ? 1 : 0;
    return deg;
}

int RegionGraph::in_degree(const RegionId& id) const {
    int deg = 0;
    for (const auto& [from, to] : edges) deg += to == id ? 1 : 0;
    return deg;
}

bool RegionGraph::has_edge(const RegionId& from, const RegionId& to) const {
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(from, to));
}

RegionGraph build_region_graph(const Tiling& t) {
    const HoleArrangement& arr = t.arrangement;
    RegionGraph g;
    g.n = arr.n;

    for (const auto& [d, dir] : t.rhombi) {
        const RegionId id = RegionId::rhombus(d);
        g.up_region.emplace(up_neighbor(d, dir), id);
        g.down_region.emplace(d, id);
    }
    for (std::size_t j = 0; j < arr.holes.size(); ++j) {
        const SubTriangle& h = arr.holes[j];
        for (int row = 0; row < h.k; ++row)
            for (int s = 0; s <= row; ++s)
                g.up_region.emplace(UpCell{h.r + row, h.i + s}, RegionId::hole(static_cast<int>(j)));
        for (int row = 1; row < h.k; ++row)
            for (int s = 0; s < row; ++s)
                g.down_region.emplace(DownCell{h.r + row, h.i + s}, RegionId::hole(static_cast<int>(j)));
    }

    for (std::size_t j = 0; j < arr.holes.size(); ++j)
        g.nodes.push_back(RegionId::hole(static_cast<int>(j)));
    for (const auto& [d, dir] : t.rhombi) g.nodes.push_back(RegionId::rhombus(d));
    g.nodes.push_back(RegionId::exterior());
    std::sort(g.nodes.begin(), g.nodes.end());

    for (const auto& [u, from] : g.up_region) {
        for (const Side side : {Side::Left, Side::Right, Side::Below}) {
            const auto d = down_neighbor(u, side, arr.n);
            if (!d) {
                g.edges.emplace_back(from, RegionId::exterior());
                continue;
            }
            const RegionId to = g.down_region.at(*d);
            if (to != from) g.edges.emplace_back(from, to);
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

SccPartition strongly_connected_components(const RegionGraph& g) {
    const int count = static_cast<int>(g.nodes.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(count));
    for (const auto& [from, to] : g.edges)
        adj[static_cast<std::size_t>(node_index(g.nodes, from))].push_back(
            node_index(g.nodes, to));

    // Tarjan, iterative.
    std::vector<int> order(static_cast<std::size_t>(count), -1);
    std::vector<int> low(static_cast<std::size_t>(count), 0);
    std::vector<int> comp(static_cast<std::size_t>(count), -1);
    std::vector<int> stack;
    std::vector<char> on_stack(static_cast<std::size_t>(count), 0);
    int next_order = 0;
    int comp_count = 0;
    std::vector<std::vector<RegionId>> raw_components;

    struct Frame {
        int node;
        std::size_t edge = 0;
    };
    for (int s = 0; s < count; ++s) {
        if (order[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<Frame> frames{{s}};
        order[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = next_order++;
        stack.push_back(s);
        on_stack[static_cast<std::size_t>(s)] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const std::size_t v = static_cast<std::size_t>(f.node);
            if (f.edge < adj[v].size()) {
                const int w = adj[v][f.edge++];
                const std::size_t wi = static_cast<std::size_t>(w);
                if (order[wi] < 0) {
                    order[wi] = low[wi] = next_order++;
                    stack.push_back(w);
                    on_stack[wi] = 1;
                    frames.push_back(Frame{w});
                } else if (on_stack[wi]) {
                    low[v] = std::min(low[v], order[wi]);
                }
                continue;
            }
            if (low[v] == order[v]) {
                std::vector<RegionId> members;
                for (;;) {
                    const int w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    comp[static_cast<std::size_t>(w)] = comp_count;
                    members.push_back(g.nodes[static_cast<std::size_t>(w)]);
                    if (w == f.node) break;
                }
                std::sort(members.begin(), members.end());
                raw_components.push_back(std::move(members));
                ++comp_count;
            }
            const int done = f.node;
            frames.pop_back();
            if (!frames.empty()) {
                const std::size_t p = static_cast<std::size_t>(frames.back().node);
                low[p] = std::min(low[p], low[static_cast<std::size_t>(done)]);
            }
        }
    }

    // Condensation order: Kahn's algorithm, smallest member id first.
    std::vector<std::set<int>> succ(static_cast<std::size_t>(comp_count));
    std::vector<int> indeg(static_cast<std::size_t>(comp_count), 0);
    for (const auto& [from, to] : g.edges) {
        const int cf = comp[static_cast<std::size_t>(node_index(g.nodes, from))];
        const int ct = comp[static_cast<std::size_t>(node_index(g.nodes, to))];
        if (cf != ct && succ[static_cast<std::size_t>(cf)].insert(ct).second)
            ++indeg[static_cast<std::size_t>(ct)];
    }
    auto cmp = [&](int x, int y) {
        return raw_components[static_cast<std::size_t>(y)].front() <
               raw_components[static_cast<std::size_t>(x)].front();
    };
    std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
    for (int c = 0; c < comp_count; ++c)
        if (indeg[static_cast<std::size_t>(c)] == 0) ready.push(c);

    SccPartition part;
    std::vector<int> renumber(static_cast<std::size_t>(comp_count), -1);
    while (!ready.empty()) {
        const int c = ready.top();
        ready.pop();
        renumber[static_cast<std::size_t>(c)] = static_cast<int>(part.components.size());
        part.components.push_back(raw_components[static_cast<std::size_t>(c)]);
        for (const int nx : succ[static_cast<std::size_t>(c)])
            if (--indeg[static_cast<std::size_t>(nx)] == 0) ready.push(nx);
    }
    for (int v = 0; v < count; ++v)
        part.component_of.emplace(g.nodes[static_cast<std::size_t>(v)],
                                  renumber[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])]);
    return part;
}

bool unique_by_acyclicity(const Tiling& t) {
    const RegionGraph g = build_region_graph(t);
    const SccPartition part = strongly_connected_components(g);
    for (const auto& members : part.components)
        if (members.size() > 1) return false;
    return true;
}

bool mergeable(const SccPartition& part, const RegionId& a, const RegionId& b) {
    return part.component_of.at(a) == part.component_of.at(b);
}

Tiling apply_cycle_flip(const Tiling& t, const std::vector<DownCell>& cycle) {
    if (cycle.size() < 2) throw FlipError("cycle needs at least two rhombi");
    std::set<DownCell> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != cycle.size()) throw FlipError("cycle repeats a rhombus");

    Tiling out = t;
    for (std::size_t m = 0; m < cycle.size(); ++m) {
        const DownCell cur = cycle[m];
        const DownCell nxt = cycle[(m + 1) % cycle.size()];
        const auto u = matched_up(t, cur);
        if (!u || !t.rhombi.count(nxt)) throw FlipError("cycle leaves the tiling");
        Dir dir{};
        bool adjacent = false;
        for (const Dir cand : {Dir::N, Dir::W, Dir::E})
            if (up_neighbor(nxt, cand) == *u) {
                dir = cand;
                adjacent = true;
            }
        if (!adjacent) throw FlipError("consecutive cycle rhombi are not adjacent");
        out.rhombi[nxt] = dir;
    }
    return out;
}

std::vector<std::vector<DownCell>> simple_rhombus_cycles(const RegionGraph& g) {
    std::vector<DownCell> rhombi;
    for (const RegionId& id : g.nodes)
        if (id.is_rhombus()) rhombi.push_back(id.down());

    std::map<DownCell, std::vector<DownCell>> adj;
    for (const auto& [from, to] : g.edges)
        if (from.is_rhombus() && to.is_rhombus()) adj[from.down()].push_back(to.down());

    std::vector<std::vector<DownCell>> cycles;
    std::vector<DownCell> path;
    std::set<DownCell> on_path;
    // Each simple cycle is found once, rooted at its smallest member.
    auto dfs = [&](auto&& self, const DownCell& root, const DownCell& at) -> void {
        for (const DownCell& nxt : adj[at]) {
            if (nxt == root) {
                cycles.push_back(path);
                continue;
            }
            if (nxt < root || on_path.count(nxt)) continue;
            path.push_back(nxt);
            on_path.insert(nxt);
            self(self, root, nxt);
            on_path.erase(nxt);
            path.pop_back();
        }
    };
    for (const DownCell& root : rhombi) {
        path = {root};
        on_path = {root};
        dfs(dfs, root, root);
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

Rotation cycle_rotation(const Tiling& t, const std::vector<DownCell>& cycle) {
    std::vector<std::pair<long long, long long>> centers;
    centers.reserve(cycle.size());
    for (const DownCell& d : cycle) {
        const auto it = t.rhombi.find(d);
        if (it == t.rhombi.end()) throw FlipError("cycle leaves the tiling");
        const auto edge = shared_edge(d, it->second);
        // Doubled midpoint keeps everything integral.
        centers.emplace_back(embed_x(edge[0]) + embed_x(edge[1]),
                             embed_y(edge[0]) + embed_y(edge[1]));
    }
    return orientation_xy(centers);
}

}  // namespace tritile
