"""Rhombus tilings of triangles with triangular holes.

Thin functional wrapper over the C++ core.  Holes are (r, i, k) triples,
rhombi are (r, i, "N"|"W"|"E") triples, segments are vertex pairs
((row, pos), (row, pos)).
"""

from ._tritile import (
    apply_gd,
    apply_trapezoid,
    canonical,
    census,
    count_tilings,
    depth,
    enumerate_tilings,
    flip_distance,
    forced,
    full_hexagon_count,
    gd_flips,
    hexagon_pair,
    parse,
    render_svg,
    run_cli,
    saturated,
    serialize,
    spread_out,
    tile,
    trapezoid_flips,
    unique,
    upper_bound,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "apply_gd",
    "apply_trapezoid",
    "canonical",
    "census",
    "count_tilings",
    "depth",
    "enumerate_tilings",
    "flip_distance",
    "forced",
    "full_hexagon_count",
    "gd_flips",
    "hexagon_pair",
    "parse",
    "render_svg",
    "run_cli",
    "saturated",
    "serialize",
    "spread_out",
    "tile",
    "trapezoid_flips",
    "unique",
    "upper_bound",
    "validate",
]
