#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tritile/census.hpp"
#include "tritile/cli.hpp"
#include "tritile/depth.hpp"
#include "tritile/errors.hpp"
#include "tritile/gd_flip.hpp"
#include "tritile/io.hpp"
#include "tritile/svg.hpp"
#include "tritile/trapezoid.hpp"

namespace py = pybind11;
using namespace tritile;

namespace {

// The bindings speak plain tuples: holes as (r, i, k), rhombi as
// (r, i, "N"|"W"|"E"), segments as ((row, pos), (row, pos)).
using PyHoles = std::vector<std::tuple<int, int, int>>;
using PyRhombi = std::vector<std::tuple<int, int, std::string>>;
using PySegment = std::pair<std::pair<int, int>, std::pair<int, int>>;

HoleArrangement to_arrangement(int n, const PyHoles& holes) {
    std::vector<SubTriangle> hs;
    hs.reserve(holes.size());
    for (const auto& [r, i, k] : holes) hs.push_back(SubTriangle{r, i, k});
    return make_arrangement(n, std::move(hs));
}

Tiling to_tiling(int n, const PyHoles& holes, const PyRhombi& rhombi) {
    Tiling t{to_arrangement(n, holes), {}};
    for (const auto& [r, i, letter] : rhombi) {
        if (letter.size() != 1) throw ValidationError("direction must be one letter");
        t.rhombi[DownCell{r, i}] = dir_from_letter(letter[0]);
    }
    const TilingCheck c = validate_tiling(t);
    if (!c.ok) throw ValidationError(c.message);
    return t;
}

PyHoles from_holes(const HoleArrangement& arr) {
    PyHoles out;
    for (const SubTriangle& h : arr.holes) out.emplace_back(h.r, h.i, h.k);
    return out;
}

PyRhombi from_rhombi(const Tiling& t) {
    PyRhombi out;
    for (const auto& [d, dir] : t.rhombi)
        out.emplace_back(d.r, d.i, std::string(1, dir_letter(dir)));
    return out;
}

std::vector<PySegment> from_segments(const std::set<GridSegment>& segs) {
    std::vector<PySegment> out;
    for (const GridSegment& s : segs)
        out.push_back({{s.a.row, s.a.pos}, {s.b.row, s.b.pos}});
    return out;
}

Compass to_compass(const std::string& name) {
    const auto c = compass_from_name(name);
    if (!c) throw ValidationError("unknown direction '" + name + "'");
    return *c;
}

}  // namespace

PYBIND11_MODULE(_tritile, m) {
    m.doc() = "rhombus tilings of triangles with triangular holes";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ResourceLimitError& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const FlipError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const ValidationError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def(
        "validate",
        [](int n, const PyHoles& holes, const PyRhombi& rhombi) {
            Tiling t{{n, {}}, {}};
            try {
                t = to_tiling(n, holes, rhombi);
            } catch (const ValidationError& e) {
                return std::pair<bool, std::string>(false, e.what());
            }
            return std::pair<bool, std::string>(true, "");
        },
        py::arg("n"), py::arg("holes"), py::arg("rhombi"),
        "check a subdivision, returning (ok, message)");

    m.def(
        "spread_out",
        [](int n, const PyHoles& holes) {
            const SpreadOut sp = is_spread_out(to_arrangement(n, holes));
            std::optional<std::tuple<int, int, int>> witness;
            if (sp.witness) witness = {sp.witness->r, sp.witness->i, sp.witness->k};
            return std::pair(sp.ok, witness);
        },
        py::arg("n"), py::arg("holes"),
        "spread-out test, returning (ok, overfull_triangle_or_None)");

    m.def(
        "saturated",
        [](int n, const PyHoles& holes) {
            PyHoles out;
            for (const SubTriangle& t : saturated_triangles(to_arrangement(n, holes)))
                out.emplace_back(t.r, t.i, t.k);
            return out;
        },
        py::arg("n"), py::arg("holes"), "triangles exactly filled by holes");

    m.def(
        "unique",
        [](int n, const PyHoles& holes, const std::string& method) {
            const HoleArrangement arr = to_arrangement(n, holes);
            if (method == "merge") return unique_by_merge(arr).unique;
            if (method == "enumerate") return count_tilings_at_most(arr, 2) == 1;
            if (method == "graph") {
                const auto t = construct(arr);
                return t && unique_by_acyclicity(*t);
            }
            throw ValidationError("unknown method '" + method + "'");
        },
        py::arg("n"), py::arg("holes"), py::arg("method") = "merge",
        "is there exactly one tiling");

    m.def(
        "tile",
        [](int n, const PyHoles& holes) -> std::optional<PyRhombi> {
            const auto t = construct(to_arrangement(n, holes));
            if (!t) return std::nullopt;
            return from_rhombi(*t);
        },
        py::arg("n"), py::arg("holes"), "one tiling, or None");

    m.def(
        "count_tilings",
        [](int n, const PyHoles& holes, std::uint64_t cap) {
            const HoleArrangement arr = to_arrangement(n, holes);
            return cap ? count_tilings_at_most(arr, cap) : count_tilings(arr);
        },
        py::arg("n"), py::arg("holes"), py::arg("cap") = 0);

    m.def(
        "enumerate_tilings",
        [](int n, const PyHoles& holes, std::uint64_t limit) {
            std::vector<PyRhombi> out;
            for (const Tiling& t :
                 enumerate_tilings(to_arrangement(n, holes), limit ? limit : UINT64_MAX))
                out.push_back(from_rhombi(t));
            return out;
        },
        py::arg("n"), py::arg("holes"), py::arg("limit") = 0);

    m.def(
        "canonical",
        [](int n, const PyHoles& holes, const PyRhombi& rhombi, const std::string& target) {
            if (target != "no-cw" && target != "no-ccw")
                throw ValidationError("target must be no-cw or no-ccw");
            const CanonicalizeResult res =
                canonicalize(to_tiling(n, holes, rhombi),
                             target == "no-cw" ? CanonicalTarget::NoCw : CanonicalTarget::NoCcw);
            return std::pair(from_rhombi(res.tiling), res.flips);
        },
        py::arg("n"), py::arg("holes"), py::arg("rhombi"), py::arg("target"),
        "flip out every offending frame, returning (rhombi, flips)");

    m.def(
        "gd_flips",
        [](int n, const PyHoles& holes, const PyRhombi& rhombi) {
            const Tiling t = to_tiling(n, holes, rhombi);
            std::vector<std::tuple<int, int, int, std::string>> out;
            for (const GdFrame& f : find_cw_gds(t))
                out.emplace_back(f.frame.r, f.frame.i, f.interior_size(), "cw");
            for (const GdFrame& f : find_ccw_gds(t))
                out.emplace_back(f.frame.r, f.frame.i, f.interior_size(), "ccw");
            return out;
        },
        py::arg("n"), py::arg("holes"), py::arg("rhombi"),
        "available frames as (r, i, interior_size, orientation)");

    m.def(
        "apply_gd",
        [](int n, const PyHoles& holes, const PyRhombi& rhombi, int r, int i, int m_,
           const std::string& orientation) {
            const Tiling t = to_tiling(n, holes, rhombi);
            const GdFrame frame{SubTriangle{r, i, m_ + 3}};
            if (orientation == "cw") return from_rhombi(apply_gd_flip(t, frame));
            if (orientation == "ccw") return from_rhombi(apply_gd_flip_inverse(t, frame));
            throw ValidationError("orientation must be cw or ccw");
        },
        py::arg("n"), py::arg("holes"), py::arg("rhombi"), py::arg("r"), py::arg("i"),
        py::arg("m"), py::arg("orientation"));

    m.def(
        "trapezoid_flips",
        [](int n, const PyHoles& holes, const PyRhombi& rhombi) {
            std::vector<std::tuple<int, int, std::string>> out;
            for (const TrapezoidFlip& f : list_trapezoid_flips(to_tiling(n, holes, rhombi)))
                out.emplace_back(f.hole.r, f.hole.i, compass_name(flip_direction(f)));
            return out;
        },
        py::arg("n"), py::arg("holes"), py::arg("rhombi"),
        "available hole moves as (r, i, direction)");

    m.def(
        "apply_trapezoid",
        [](int n, const PyHoles& holes, const PyRhombi& rhombi, int r, int i,
           const std::string& direction) {
            const Tiling out = apply_trapezoid_flip(to_tiling(n, holes, rhombi),
                                                    UpCell{r, i}, to_compass(direction));
            return std::pair(from_holes(out.arrangement), from_rhombi(out));
        },
        py::arg("n"), py::arg("holes"), py::arg("rhombi"), py::arg("r"), py::arg("i"),
        py::arg("direction"), "move a hole, returning (holes, rhombi)");

    m.def(
        "flip_distance",
        [](int n, const PyHoles& holes_a, const PyRhombi& rhombi_a, const PyHoles& holes_b,
           const PyRhombi& rhombi_b, std::uint64_t cap) {
            return flip_distance(to_tiling(n, holes_a, rhombi_a),
                                 to_tiling(n, holes_b, rhombi_b), cap);
        },
        py::arg("n"), py::arg("holes_a"), py::arg("rhombi_a"), py::arg("holes_b"),
        py::arg("rhombi_b"), py::arg("cap") = 10'000'000,
        "trapezoid flips from a to b, or None");

    m.def(
        "upper_bound",
        [](int n, const PyHoles& holes_a, const PyRhombi& rhombi_a, const PyHoles& holes_b,
           const PyRhombi& rhombi_b) {
            return upper_bound_distance(to_tiling(n, holes_a, rhombi_a),
                                        to_tiling(n, holes_b, rhombi_b));
        },
        py::arg("n"), py::arg("holes_a"), py::arg("rhombi_a"), py::arg("holes_b"),
        py::arg("rhombi_b"));

    m.def(
        "hexagon_pair",
        [](int n, int residue_class) {
            const auto [cw, ccw] = hexagon_pair(n, residue_class);
            return std::tuple(from_holes(cw.arrangement), from_rhombi(cw), from_rhombi(ccw));
        },
        py::arg("n"), py::arg("residue_class") = 0,
        "(holes, cw_rhombi, ccw_rhombi) of the sweep pair");

    m.def("full_hexagon_count", &full_hexagon_count, py::arg("n"),
          py::arg("residue_class") = 0);

    m.def(
        "forced",
        [](int n, const PyHoles& holes, const std::optional<PyRhombi>& rhombi,
           const std::string& method) {
            const HoleArrangement arr = to_arrangement(n, holes);
            if (method == "procedure") return from_segments(forced_segments_procedure(arr).segments);
            if (method == "oracle") return from_segments(forced_segments_oracle(arr).segments);
            if (method != "scc") throw ValidationError("unknown method '" + method + "'");
            if (rhombi) return from_segments(forced_segments_scc(to_tiling(n, holes, *rhombi)).segments);
            const auto t = construct(arr);
            if (!t) throw ValidationError("arrangement has no tiling");
            return from_segments(forced_segments_scc(*t).segments);
        },
        py::arg("n"), py::arg("holes"), py::arg("rhombi") = std::nullopt,
        py::arg("method") = "scc", "segments drawn in every tiling");

    m.def(
        "depth",
        [](int n, const PyHoles& holes, const PyRhombi& rhombi, const std::string& direction) {
            return depth_field(to_tiling(n, holes, rhombi), to_compass(direction)).value;
        },
        py::arg("n"), py::arg("holes"), py::arg("rhombi"), py::arg("direction") = "e");

    m.def(
        "census",
        [](int n, int threads) {
            const CensusReport rep = census(n, threads);
            py::dict d;
            d["n"] = rep.n;
            d["candidates"] = rep.candidates;
            d["spread_out"] = rep.spread_out;
            d["uniquely_tileable"] = rep.uniquely_tileable;
            py::dict hist;
            for (const auto& [count, arrangements] : rep.tiling_histogram)
                hist[py::int_(count)] = arrangements;
            d["histogram"] = hist;
            return d;
        },
        py::arg("n"), py::arg("threads") = 0);

    m.def(
        "parse",
        [](const std::string& text) {
            std::istringstream in(text);
            ParsedFile pf = parse_file(in);
            std::optional<PyRhombi> rhombi;
            if (pf.has_rhombi) {
                Tiling t{pf.arrangement, pf.rhombi};
                rhombi = from_rhombi(t);
            }
            return std::tuple(pf.arrangement.n, from_holes(pf.arrangement), rhombi);
        },
        py::arg("text"), "(n, holes, rhombi_or_None) from document text");

    m.def(
        "serialize",
        [](int n, const PyHoles& holes, const std::optional<PyRhombi>& rhombi) {
            if (!rhombi) return to_string(to_arrangement(n, holes));
            return to_string(to_tiling(n, holes, *rhombi));
        },
        py::arg("n"), py::arg("holes"), py::arg("rhombi") = std::nullopt);

    m.def(
        "render_svg",
        [](int n, const PyHoles& holes, const PyRhombi& rhombi, const std::string& overlay,
           const std::string& direction) {
            RenderOptions opts;
            if (overlay == "graph") opts.overlay = Overlay::Graph;
            else if (overlay == "forced") opts.overlay = Overlay::Forced;
            else if (overlay == "depth") opts.overlay = Overlay::Depth;
            else if (overlay != "none") throw ValidationError("unknown overlay");
            opts.depth_ray = to_compass(direction);
            std::ostringstream os;
            render_svg(os, to_tiling(n, holes, rhombi), opts);
            return os.str();
        },
        py::arg("n"), py::arg("holes"), py::arg("rhombi"), py::arg("overlay") = "none",
        py::arg("direction") = "e");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args, const std::string& stdin_text) {
            std::istringstream in(stdin_text);
            std::ostringstream out, err;
            const int code = run_cli(args, in, out, err);
            return std::tuple(code, out.str(), err.str());
        },
        py::arg("args"), py::arg("stdin_text") = "",
        "(exit_code, stdout, stderr) of the command line driver");
}
