#pragma once

#include <map>
#include <string>
#include <vector>

#include "tritile/tiling.hpp"

namespace tritile {

// A region is a hole, a rhombus, or the single exterior region.
struct RegionId {
    enum class Kind : std::uint8_t { Hole = 0, Rhombus = 1, Exterior = 2 };
    Kind kind = Kind::Exterior;
    int a = 0;  // hole index, or down-cell row
    int b = 0;  // down-cell position

    static RegionId hole(int index) { return RegionId{Kind::Hole, index, 0}; }
    static RegionId rhombus(const DownCell& d) { return RegionId{Kind::Rhombus, d.r, d.i}; }
    static RegionId exterior() { return RegionId{Kind::Exterior, 0, 0}; }

    bool is_hole() const { return kind == Kind::Hole; }
    bool is_rhombus() const { return kind == Kind::Rhombus; }
    bool is_exterior() const { return kind == Kind::Exterior; }
    DownCell down() const { return DownCell{a, b}; }

    auto operator<=>(const RegionId&) const = default;
};

std::string to_string(const RegionId&);

// Directed multigraph: one edge a -> b per up cell of a sharing an edge
// with a down cell of b; up cells looking past the triangle boundary point
// at the exterior region.  Edges are sorted; repetitions carry multiplicity.
struct RegionGraph {
    int n = 0;
    std::vector<RegionId> nodes;  // sorted: holes, rhombi, exterior
    std::vector<std::pair<RegionId, RegionId>> edges;
    std::map<UpCell, RegionId> up_region;
    std::map<DownCell, RegionId> down_region;

    int out_degree(const RegionId&) const;
    int in_degree(const RegionId&) const;
    bool has_edge(const RegionId& from, const RegionId& to) const;
};

RegionGraph build_region_graph(const Tiling&);

// Components listed in a topological order of the condensation; ties broken
// by smallest member id.  Members sorted within each component.
struct SccPartition {
    std::vector<std::vector<RegionId>> components;
    std::map<RegionId, int> component_of;
};
SccPartition strongly_connected_components(const RegionGraph&);

// The tiling is the arrangement's only one iff no directed cycle survives
// among the rhombus nodes.
bool unique_by_acyclicity(const Tiling&);

// With an edge a -> b present, the regions can merge iff b reaches back to
// a, i.e. they share a strongly connected component.
bool mergeable(const SccPartition&, const RegionId& a, const RegionId& b);

// Re-pair along a directed rhombus cycle: the up cell of each rhombus moves
// to the down cell of the next.  Throws FlipError unless the cycle's edges
// all exist and the cells are distinct.
Tiling apply_cycle_flip(const Tiling&, const std::vector<DownCell>& cycle);

// Every simple directed cycle among rhombus nodes, each rotated to start at
// its smallest member, sorted; exponential, meant for small test cases.
std::vector<std::vector<DownCell>> simple_rhombus_cycles(const RegionGraph&);

// Geometric orientation of a rhombus cycle, from the polygon through the
// rhombus centres in cycle order.
Rotation cycle_rotation(const Tiling&, const std::vector<DownCell>& cycle);

}  // namespace tritile
