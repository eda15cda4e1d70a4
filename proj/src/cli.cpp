#include "tritile/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tritile/census.hpp"
#include "tritile/depth.hpp"
#include "tritile/errors.hpp"
#include "tritile/gd_flip.hpp"
#include "tritile/io.hpp"
#include "tritile/svg.hpp"
#include "tritile/trapezoid.hpp"

namespace tritile {

namespace {

using nlohmann::json;

// Early return with a specific exit code; the message goes to stderr.
struct ExitWith {
    int code;
    std::string message;
};

std::uint64_t env_limit() {
    const char* s = std::getenv("TRITILE_LIMIT");
    if (!s || !*s) return 10'000'000ULL;
    char* end = nullptr;
    const std::uint64_t v = std::strtoull(s, &end, 10);
    if (*end != '\0' || v == 0) throw ExitWith{2, "TRITILE_LIMIT must be a positive integer"};
    return v;
}

ParsedFile load_path(const std::string& path, std::istream& in) {
    if (path == "-") return parse_file(in);
    std::ifstream f(path);
    if (!f) throw ExitWith{2, "cannot open '" + path + "'"};
    return parse_file(f);
}

Tiling as_tiling(ParsedFile&& pf) {
    if (pf.has_rhombi) {
        Tiling t{std::move(pf.arrangement), std::move(pf.rhombi)};
        const TilingCheck c = validate_tiling(t);
        if (!c.ok) throw ExitWith{2, "invalid subdivision: " + c.message};
        return t;
    }
    auto t = construct(pf.arrangement);
    if (!t) throw ExitWith{1, "no tiling exists"};
    return std::move(*t);
}

void write_out(const std::string& out_path, std::ostream& out, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        out << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw ExitWith{2, "cannot write '" + out_path + "'"};
    f << text;
}

json tri_json(const SubTriangle& t) { return json{{"r", t.r}, {"i", t.i}, {"k", t.k}}; }

json rhombi_json(const std::map<DownCell, Dir>& rhombi) {
    json a = json::array();
    for (const auto& [d, dir] : rhombi)
        a.push_back({{"r", d.r}, {"i", d.i}, {"dir", std::string(1, dir_letter(dir))}});
    return a;
}

json tiling_json(const Tiling& t) {
    json holes = json::array();
    for (const SubTriangle& h : t.arrangement.holes) holes.push_back(tri_json(h));
    return json{{"n", t.arrangement.n}, {"holes", holes}, {"rhombi", rhombi_json(t.rhombi)}};
}

json segments_json(const std::set<GridSegment>& segs) {
    json a = json::array();
    for (const GridSegment& s : segs)
        a.push_back({s.a.row, s.a.pos, s.b.row, s.b.pos});
    return a;
}

std::vector<int> parse_ints(const std::string& text, std::size_t want,
                            std::string* trailing = nullptr) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (trailing && out.size() == want) {
            *trailing = item;
            return out;
        }
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ExitWith{2, "bad number '" + item + "' in flip spec"};
        }
    }
    return out;
}

struct Options {
    bool json_output = false;
    std::istream* in = nullptr;
    std::ostream* out = nullptr;
};

int cmd_check(const Options& o, const std::string& file) {
    ParsedFile pf = load_path(file, *o.in);
    if (pf.has_rhombi) {
        // A subdivision file must at least be internally consistent.
        Tiling t{pf.arrangement, pf.rhombi};
        const TilingCheck c = validate_tiling(t);
        if (!c.ok) throw ExitWith{2, "broken subdivision: " + c.message};
    }
    const SpreadOut sp = is_spread_out(pf.arrangement);
    if (o.json_output) {
        json j{{"spread_out", sp.ok}};
        j["witness"] = sp.witness ? tri_json(*sp.witness) : json(nullptr);
        *o.out << j.dump(2) << "\n";
    } else {
        *o.out << "spread_out " << (sp.ok ? "true" : "false") << "\n";
        if (sp.witness)
            *o.out << "witness " << sp.witness->r << " " << sp.witness->i << " "
                   << sp.witness->k << "\n";
    }
    return sp.ok ? 0 : 1;
}

int cmd_saturated(const Options& o, const std::string& file) {
    const HoleArrangement arr = load_path(file, *o.in).arrangement;
    const SpreadOut sp = is_spread_out(arr);
    const std::vector<SubTriangle> sat = saturated_triangles(arr);
    if (o.json_output) {
        json j{{"spread_out", sp.ok}};
        j["witness"] = sp.witness ? tri_json(*sp.witness) : json(nullptr);
        j["saturated"] = json::array();
        for (const SubTriangle& t : sat) j["saturated"].push_back(tri_json(t));
        *o.out << j.dump(2) << "\n";
    } else {
        *o.out << "spread_out " << (sp.ok ? "true" : "false") << "\n";
        if (sp.witness)
            *o.out << "witness " << sp.witness->r << " " << sp.witness->i << " "
                   << sp.witness->k << "\n";
        for (const SubTriangle& t : sat)
            *o.out << "saturated " << t.r << " " << t.i << " " << t.k << "\n";
    }
    return sp.ok ? 0 : 1;
}

int cmd_unique(const Options& o, const std::string& file, const std::string& method) {
    const HoleArrangement arr = load_path(file, *o.in).arrangement;
    bool unique = false;
    json extra;
    if (method == "merge") {
        const MergeResult res = unique_by_merge(arr);
        unique = res.unique;
        if (o.json_output) {
            extra["steps"] = json::array();
            for (const MergeStep& s : res.steps)
                extra["steps"].push_back({{"first", tri_json(s.first)},
                                          {"second", tri_json(s.second)},
                                          {"merged", tri_json(s.merged)}});
            extra["final"] = json::array();
            for (const SubTriangle& t : res.final_set) extra["final"].push_back(tri_json(t));
        }
    } else if (method == "graph") {
        const auto t = construct(arr);
        if (!t) throw ExitWith{1, "no tiling exists"};
        unique = unique_by_acyclicity(*t);
    } else {
        const std::uint64_t c = count_tilings_at_most(arr, 2);
        unique = c == 1;
        if (o.json_output) extra["tilings_capped_at_2"] = c;
    }
    if (o.json_output) {
        json j{{"unique", unique}, {"method", method}};
        j.update(extra);
        *o.out << j.dump(2) << "\n";
    } else {
        *o.out << "unique " << (unique ? "true" : "false") << "\n";
    }
    return unique ? 0 : 1;
}

int cmd_tile(const Options& o, const std::string& file, const std::string& out_path) {
    const HoleArrangement arr = load_path(file, *o.in).arrangement;
    const auto t = construct(arr);
    if (!t) throw ExitWith{1, "no tiling exists"};
    write_out(out_path, *o.out,
              o.json_output ? tiling_json(*t).dump(2) + "\n" : to_string(*t));
    return 0;
}

int cmd_enumerate(const Options& o, const std::string& file, bool count_only,
                  std::uint64_t limit, bool has_limit) {
    const HoleArrangement arr = load_path(file, *o.in).arrangement;
    const std::uint64_t cap = has_limit ? limit : env_limit();
    if (count_only) {
        const std::uint64_t c = count_tilings_at_most(arr, cap + 1);
        if (!has_limit && c > cap)
            throw ResourceLimitError("more than " + std::to_string(cap) + " tilings");
        const std::uint64_t shown = std::min(c, cap);
        if (o.json_output)
            *o.out << json{{"count", shown}, {"capped", c > cap}}.dump(2) << "\n";
        else
            *o.out << "count " << shown << "\n";
        return 0;
    }
    std::vector<Tiling> all = enumerate_tilings(arr, cap + 1);
    if (!has_limit && all.size() > cap)
        throw ResourceLimitError("more than " + std::to_string(cap) + " tilings");
    const bool capped = all.size() > cap;
    if (capped) all.resize(static_cast<std::size_t>(cap));
    if (o.json_output) {
        json j{{"count", all.size()}, {"capped", capped}, {"tilings", json::array()}};
        for (const Tiling& t : all) j["tilings"].push_back(rhombi_json(t.rhombi));
        *o.out << j.dump(2) << "\n";
    } else {
        std::size_t index = 0;
        for (const Tiling& t : all) {
            *o.out << "tiling " << index++ << ":";
            for (const auto& [d, dir] : t.rhombi)
                *o.out << " " << d.r << "," << d.i << dir_letter(dir);
            *o.out << "\n";
        }
        *o.out << "count " << all.size() << "\n";
    }
    return 0;
}

int cmd_canonical(const Options& o, const std::string& file, const std::string& target,
                  const std::string& out_path) {
    Tiling t = as_tiling(load_path(file, *o.in));
    const CanonicalizeResult res = canonicalize(
        t, target == "no-cw" ? CanonicalTarget::NoCw : CanonicalTarget::NoCcw);
    if (o.json_output) {
        write_out(out_path, *o.out,
                  json{{"flips", res.flips}, {"tiling", tiling_json(res.tiling)}}.dump(2) +
                      "\n");
    } else {
        std::ostringstream doc;
        doc << "# " << target << " after " << res.flips << " flips\n";
        serialize(doc, res.tiling);
        write_out(out_path, *o.out, doc.str());
    }
    return 0;
}

int cmd_flips(const Options& o, const std::string& file, const std::string& kind) {
    const Tiling t = as_tiling(load_path(file, *o.in));
    json jgd = json::array(), jtz = json::array();
    std::ostringstream text;
    if (kind == "gd" || kind == "all") {
        for (const GdFrame& f : find_cw_gds(t)) {
            text << "gd " << f.frame.r << " " << f.frame.i << " " << f.interior_size()
                 << " cw\n";
            jgd.push_back({{"r", f.frame.r},
                           {"i", f.frame.i},
                           {"m", f.interior_size()},
                           {"orientation", "cw"}});
        }
        for (const GdFrame& f : find_ccw_gds(t)) {
            text << "gd " << f.frame.r << " " << f.frame.i << " " << f.interior_size()
                 << " ccw\n";
            jgd.push_back({{"r", f.frame.r},
                           {"i", f.frame.i},
                           {"m", f.interior_size()},
                           {"orientation", "ccw"}});
        }
    }
    if (kind == "trapezoid" || kind == "all") {
        for (const TrapezoidFlip& f : list_trapezoid_flips(t)) {
            const Compass c = flip_direction(f);
            text << "tz " << f.hole.r << " " << f.hole.i << " " << compass_name(c) << "\n";
            jtz.push_back({{"r", f.hole.r},
                           {"i", f.hole.i},
                           {"dir", compass_name(c)},
                           {"landing", {{"r", f.landing.r}, {"i", f.landing.i}}}});
        }
    }
    if (o.json_output)
        *o.out << json{{"gd", jgd}, {"trapezoid", jtz}}.dump(2) << "\n";
    else
        *o.out << text.str();
    return 0;
}

int cmd_apply(const Options& o, const std::string& file, const std::string& spec,
              const std::string& out_path) {
    const Tiling t = as_tiling(load_path(file, *o.in));
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw ExitWith{2, "flip spec needs 'gd:' or 'tz:'"};
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    Tiling result;
    if (kind == "gd") {
        std::string orient;
        const std::vector<int> v = parse_ints(rest, 3, &orient);
        if (v.size() != 3 || (orient != "cw" && orient != "ccw"))
            throw ExitWith{2, "expected gd:<r>,<i>,<m>,<cw|ccw>"};
        const GdFrame frame{SubTriangle{v[0], v[1], v[2] + 3}};
        result = orient == "cw" ? apply_gd_flip(t, frame) : apply_gd_flip_inverse(t, frame);
    } else if (kind == "tz") {
        std::string dir;
        const std::vector<int> v = parse_ints(rest, 2, &dir);
        const auto c = compass_from_name(dir);
        if (v.size() != 2 || !c) throw ExitWith{2, "expected tz:<r>,<i>,<direction>"};
        result = apply_trapezoid_flip(t, UpCell{v[0], v[1]}, *c);
    } else {
        throw ExitWith{2, "unknown flip kind '" + kind + "'"};
    }
    write_out(out_path, *o.out,
              o.json_output ? tiling_json(result).dump(2) + "\n" : to_string(result));
    return 0;
}

int cmd_forced(const Options& o, const std::string& file, const std::string& method) {
    ParsedFile pf = load_path(file, *o.in);
    const HoleArrangement arr = pf.arrangement;
    ForcedReport rep;
    if (method == "scc") {
        rep = forced_segments_scc(as_tiling(std::move(pf)));
    } else {
        if (!construct(arr)) throw ExitWith{1, "no tiling exists"};
        rep = method == "procedure" ? forced_segments_procedure(arr)
                                    : forced_segments_oracle(arr);
    }
    if (o.json_output) {
        *o.out << json{{"method", method},
                       {"count", rep.segments.size()},
                       {"segments", segments_json(rep.segments)}}
                      .dump(2)
               << "\n";
    } else {
        for (const GridSegment& s : rep.segments)
            *o.out << "segment " << s.a.row << " " << s.a.pos << " " << s.b.row << " "
                   << s.b.pos << "\n";
        *o.out << "count " << rep.segments.size() << "\n";
    }
    return 0;
}

int cmd_graph(const Options& o, const std::string& file, const std::string& format) {
    const Tiling t = as_tiling(load_path(file, *o.in));
    const RegionGraph g = build_region_graph(t);
    if (o.json_output) {
        json nodes = json::array(), edges = json::array();
        for (const RegionId& id : g.nodes) nodes.push_back(to_string(id));
        for (std::size_t e = 0; e < g.edges.size();) {
            std::size_t mult = 1;
            while (e + mult < g.edges.size() && g.edges[e + mult] == g.edges[e]) ++mult;
            edges.push_back({{"from", to_string(g.edges[e].first)},
                             {"to", to_string(g.edges[e].second)},
                             {"multiplicity", mult}});
            e += mult;
        }
        *o.out << json{{"nodes", nodes}, {"edges", edges}}.dump(2) << "\n";
        return 0;
    }
    if (format == "dot") {
        *o.out << "digraph regions {\n";
        for (const RegionId& id : g.nodes) *o.out << "  \"" << to_string(id) << "\";\n";
        for (const auto& [from, to] : g.edges)
            *o.out << "  \"" << to_string(from) << "\" -> \"" << to_string(to) << "\";\n";
        *o.out << "}\n";
    } else {
        for (std::size_t e = 0; e < g.edges.size();) {
            std::size_t mult = 1;
            while (e + mult < g.edges.size() && g.edges[e + mult] == g.edges[e]) ++mult;
            *o.out << to_string(g.edges[e].first) << " " << to_string(g.edges[e].second)
                   << " " << mult << "\n";
            e += mult;
        }
    }
    return 0;
}

int cmd_depth(const Options& o, const std::string& file, const std::string& dir) {
    const Tiling t = as_tiling(load_path(file, *o.in));
    const auto c = compass_from_name(dir);
    if (!c) throw ExitWith{2, "unknown direction '" + dir + "'"};
    const DepthField f = depth_field(t, *c);
    if (o.json_output) {
        *o.out << json{{"dir", dir}, {"rows", f.value}}.dump(2) << "\n";
    } else {
        for (const auto& row : f.value) {
            for (std::size_t p = 0; p < row.size(); ++p)
                *o.out << (p ? " " : "") << row[p];
            *o.out << "\n";
        }
    }
    return 0;
}

int cmd_hexpair(const Options& o, int n, int residue, const std::string& out_base) {
    const auto [cw, ccw] = hexagon_pair(n, residue);
    if (o.json_output) {
        json holes = json::array();
        for (const SubTriangle& h : cw.arrangement.holes) holes.push_back(tri_json(h));
        *o.out << json{{"n", n},
                       {"class", residue},
                       {"holes", holes},
                       {"cw", rhombi_json(cw.rhombi)},
                       {"ccw", rhombi_json(ccw.rhombi)},
                       {"full_hexagons", full_hexagon_count(n, residue)}}
                      .dump(2)
               << "\n";
        return 0;
    }
    if (!out_base.empty()) {
        write_out(out_base + ".cw", *o.out, to_string(cw));
        write_out(out_base + ".ccw", *o.out, to_string(ccw));
        *o.out << out_base << ".cw\n" << out_base << ".ccw\n";
        return 0;
    }
    *o.out << "# clockwise sweep\n" << to_string(cw);
    *o.out << "# counterclockwise sweep\n" << to_string(ccw);
    return 0;
}

int cmd_distance(const Options& o, const std::string& file_a, const std::string& file_b,
                 bool bound_only) {
    if (file_a == "-" && file_b == "-")
        throw ExitWith{2, "only one input may come from stdin"};
    const Tiling a = as_tiling(load_path(file_a, *o.in));
    const Tiling b = as_tiling(load_path(file_b, *o.in));
    if (bound_only) {
        const int bound = upper_bound_distance(a, b);
        if (o.json_output)
            *o.out << json{{"bound", bound}}.dump(2) << "\n";
        else
            *o.out << "bound " << bound << "\n";
        return 0;
    }
    const auto d = flip_distance(a, b, env_limit());
    if (!d) {
        if (o.json_output)
            *o.out << json{{"reachable", false}}.dump(2) << "\n";
        else
            *o.out << "distance unreachable\n";
        return 1;
    }
    if (o.json_output)
        *o.out << json{{"reachable", true}, {"distance", *d}}.dump(2) << "\n";
    else
        *o.out << "distance " << *d << "\n";
    return 0;
}

int cmd_census(const Options& o, int n, int threads) {
    const CensusReport rep = census(n, threads);
    if (o.json_output) {
        json hist = json::array();
        for (const auto& [count, arrangements] : rep.tiling_histogram)
            hist.push_back({{"tilings", count}, {"arrangements", arrangements}});
        *o.out << json{{"n", rep.n},
                       {"candidates", rep.candidates},
                       {"spread_out", rep.spread_out},
                       {"uniquely_tileable", rep.uniquely_tileable},
                       {"histogram", hist}}
                      .dump(2)
               << "\n";
    } else {
        *o.out << "n " << rep.n << "\n";
        *o.out << "candidates " << rep.candidates << "\n";
        *o.out << "spread_out " << rep.spread_out << "\n";
        *o.out << "uniquely_tileable " << rep.uniquely_tileable << "\n";
        for (const auto& [count, arrangements] : rep.tiling_histogram)
            *o.out << "histogram " << count << " " << arrangements << "\n";
    }
    return 0;
}

int cmd_render(const Options& o, const std::string& file, const std::string& out_path,
               const std::string& overlay, const std::string& dir, double scale) {
    const Tiling t = as_tiling(load_path(file, *o.in));
    RenderOptions opts;
    opts.scale = scale;
    if (overlay == "graph") opts.overlay = Overlay::Graph;
    else if (overlay == "forced") opts.overlay = Overlay::Forced;
    else if (overlay == "depth") opts.overlay = Overlay::Depth;
    const auto c = compass_from_name(dir);
    if (!c) throw ExitWith{2, "unknown direction '" + dir + "'"};
    opts.depth_ray = *c;
    std::ostringstream svg;
    render_svg(svg, t, opts);
    write_out(out_path, *o.out, svg.str());
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"fine mixed subdivisions of a triangle with triangular holes"};
    app.require_subcommand(1);
    Options o;
    o.in = &in;
    o.out = &out;
    app.add_flag("--json", o.json_output, "machine readable output");

    std::string file, file_b, out_path, method = "merge", forced_method = "scc";
    std::string target, kind = "all";
    std::string spec, dir = "e", format = "dot", overlay = "none", out_base;
    std::uint64_t limit = 0;
    bool count_only = false, bound_only = false;
    int n = 0, residue = 0, threads = 0;
    double scale = 48.0;

    const auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", file, "input file, '-' for stdin")->required();
        sub->fallthrough();
    };

    auto* check = app.add_subcommand("check", "validate a subdivision");
    add_file(check);
    auto* saturated = app.add_subcommand("saturated", "spread-out test and exactly full triangles");
    add_file(saturated);
    auto* unique = app.add_subcommand("unique", "is the tiling unique");
    add_file(unique);
    unique->add_option("--method", method, "merge, graph or enumerate")
        ->check(CLI::IsMember({"merge", "graph", "enumerate"}));
    auto* tile = app.add_subcommand("tile", "construct a tiling");
    add_file(tile);
    tile->add_option("-o,--output", out_path, "output file");
    auto* enumerate = app.add_subcommand("enumerate", "list every tiling");
    add_file(enumerate);
    enumerate->add_flag("--count-only", count_only, "print only the count");
    auto* limit_opt = enumerate->add_option("--limit", limit, "stop after this many");
    auto* canonical = app.add_subcommand("canonical", "flip until no offending frame is left");
    add_file(canonical);
    canonical->add_option("--target", target, "no-cw or no-ccw")
        ->required()
        ->check(CLI::IsMember({"no-cw", "no-ccw"}));
    canonical->add_option("-o,--output", out_path, "output file");
    auto* flips = app.add_subcommand("flips", "list available flips");
    add_file(flips);
    flips->add_option("--kind", kind, "gd, trapezoid or all")
        ->check(CLI::IsMember({"gd", "trapezoid", "all"}));
    auto* apply = app.add_subcommand("apply", "apply one flip");
    add_file(apply);
    apply->add_option("--flip", spec, "gd:<r>,<i>,<m>,<cw|ccw> or tz:<r>,<i>,<dir>")
        ->required();
    apply->add_option("-o,--output", out_path, "output file");
    auto* forced = app.add_subcommand("forced", "segments drawn in every tiling");
    add_file(forced);
    forced->add_option("--method", forced_method, "scc, procedure or oracle")
        ->check(CLI::IsMember({"scc", "procedure", "oracle"}));
    auto* graph = app.add_subcommand("graph", "region adjacency graph");
    add_file(graph);
    graph->add_option("--format", format, "dot or edges")
        ->check(CLI::IsMember({"dot", "edges"}));
    auto* depth = app.add_subcommand("depth", "per-vertex ray depth");
    add_file(depth);
    depth->add_option("--dir", dir, "e, w, ne, nw, se or sw")
        ->check(CLI::IsMember({"e", "w", "ne", "nw", "se", "sw"}));
    auto* hexpair = app.add_subcommand("hexpair", "distant tiling pair from the corner sweeps");
    hexpair->add_option("n", n, "triangle size")->required();
    hexpair->add_option("--class", residue, "corner residue class 0, 1 or 2")
        ->check(CLI::Range(0, 2));
    hexpair->add_option("-o,--output", out_base, "write <base>.cw and <base>.ccw");
    hexpair->fallthrough();
    auto* distance = app.add_subcommand("distance", "trapezoid flips between two tilings");
    distance->add_option("a", file, "first tiling")->required();
    distance->add_option("b", file_b, "second tiling")->required();
    bool exact_only = false;
    auto* exact_flag = distance->add_flag("--exact", exact_only, "search for the exact distance (default)");
    distance->add_flag("--bound", bound_only, "report the height bound instead")
        ->excludes(exact_flag);
    distance->fallthrough();
    auto* census_cmd = app.add_subcommand("census", "sweep all unit hole arrangements");
    census_cmd->add_option("n", n, "triangle size")->required();
    census_cmd->add_option("--threads", threads, "worker threads, 0 = hardware");
    census_cmd->fallthrough();
    auto* render = app.add_subcommand("render", "draw the subdivision as svg");
    add_file(render);
    render->add_option("-o,--output", out_path, "output file");
    render->add_option("--overlay", overlay, "none, graph, forced or depth")
        ->check(CLI::IsMember({"none", "graph", "forced", "depth"}));
    render->add_option("--dir", dir, "ray for the depth overlay")
        ->check(CLI::IsMember({"e", "w", "ne", "nw", "se", "sw"}));
    render->add_option("--scale", scale, "pixels per unit edge");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*check) return cmd_check(o, file);
        if (*saturated) return cmd_saturated(o, file);
        if (*unique) return cmd_unique(o, file, method);
        if (*tile) return cmd_tile(o, file, out_path);
        if (*enumerate)
            return cmd_enumerate(o, file, count_only, limit, limit_opt->count() > 0);
        if (*canonical) return cmd_canonical(o, file, target, out_path);
        if (*flips) return cmd_flips(o, file, kind);
        if (*apply) return cmd_apply(o, file, spec, out_path);
        if (*forced) return cmd_forced(o, file, forced_method);
        if (*graph) return cmd_graph(o, file, format);
        if (*depth) return cmd_depth(o, file, dir);
        if (*hexpair) return cmd_hexpair(o, n, residue, out_base);
        if (*distance) return cmd_distance(o, file, file_b, bound_only);
        if (*census_cmd) return cmd_census(o, n, threads);
        if (*render) return cmd_render(o, file, out_path, overlay, dir, scale);
        err << "no command\n";
        return 2;
    } catch (const ExitWith& e) {
        err << e.message << "\n";
        return e.code;
    } catch (const ResourceLimitError& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const FlipError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    }
}

}  // namespace tritile
