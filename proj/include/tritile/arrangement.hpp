#pragma once

#include <optional>
#include <vector>

#include "tritile/grid.hpp"

namespace tritile {

// Upward triangular holes with pairwise disjoint interiors whose sides sum
// to n.  Holes are kept sorted by (r, i, k).
struct HoleArrangement {
    int n = 0;
    std::vector<SubTriangle> holes;
};

// Throws ValidationError when the structure is broken: n < 1, a hole out of
// bounds, sides not summing to n, or two holes sharing interior.
void validate_arrangement(const HoleArrangement&);

// Sorts, validates, returns.
HoleArrangement make_arrangement(int n, std::vector<SubTriangle> holes);

bool unit_holes_only(const HoleArrangement&);

// Replace every side-k hole with the k unit cells of its bottom row.  The
// result admits exactly the same tilings.
HoleArrangement unitize(const HoleArrangement&);

// An arrangement is spread out when no upward triangle T holds more hole
// area than its side: sum over holes s of max(0, side(s cap T)) <= side(T).
struct SpreadOut {
    bool ok = false;
    std::optional<SubTriangle> witness;  // an overfull T when !ok
};
SpreadOut is_spread_out(const HoleArrangement&);

// Triangles whose hole overlap fills them exactly.  Always includes every
// hole and the whole triangle.  Sorted by (r, i, k).
std::vector<SubTriangle> saturated_triangles(const HoleArrangement&);

// Greedy merge: repeatedly take the first pair of current triangles, in
// lexicographic (r, i, k) order, that touch in exactly one point, and
// replace the pair by its join.  The arrangement is uniquely tileable iff
// this ends with the whole triangle.
struct MergeStep {
    SubTriangle first;
    SubTriangle second;
    SubTriangle merged;
};
struct MergeResult {
    bool unique = false;
    std::vector<MergeStep> steps;
    std::vector<SubTriangle> final_set;
};
MergeResult unique_by_merge(const HoleArrangement&);

}  // namespace tritile
