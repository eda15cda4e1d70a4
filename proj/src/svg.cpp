#include "tritile/svg.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace tritile {

namespace {

constexpr double kRoot3Half = 0.8660254037844386;
constexpr double kMargin = 24.0;

struct Mapper {
    int n;
    double scale;
    double x(const Vertex& v) const {
        return kMargin + scale * (v.pos - v.row / 2.0 + n / 2.0);
    }
    double y(const Vertex& v) const { return kMargin + scale * (v.row * kRoot3Half); }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::array<Vertex, 4> rhombus_corners(const DownCell& d, Dir dir) {
    switch (dir) {
        case Dir::N:
            return {Vertex{d.r - 1, d.i}, Vertex{d.r, d.i}, Vertex{d.r + 1, d.i + 1},
                    Vertex{d.r, d.i + 1}};
        case Dir::W:
            return {Vertex{d.r, d.i}, Vertex{d.r, d.i + 1}, Vertex{d.r + 1, d.i + 1},
                    Vertex{d.r + 1, d.i}};
        case Dir::E:
            return {Vertex{d.r, d.i}, Vertex{d.r, d.i + 1}, Vertex{d.r + 1, d.i + 2},
                    Vertex{d.r + 1, d.i + 1}};
    }
    return {};
}

const char* rhombus_fill(Dir dir) {
    switch (dir) {
        case Dir::N: return "#a6cee3";
        case Dir::W: return "#b2df8a";
        case Dir::E: return "#fdbf6f";
    }
    return "#ffffff";
}

template <typename Range>
void polygon(std::ostream& os, const Mapper& m, const Range& corners,
             const char* fill, const char* extra = "") {
    os << "<polygon points=\"";
    bool first = true;
    for (const Vertex& v : corners) {
        if (!first) os << " ";
        first = false;
        os << num(m.x(v)) << "," << num(m.y(v));
    }
    os << "\" fill=\"" << fill << "\" stroke=\"#333333\" stroke-width=\"1\"" << extra
       << "/>\n";
}

struct Point {
    double x = 0;
    double y = 0;
};

Point region_center(const Mapper& m, const Tiling& t, const RegionId& id) {
    if (id.is_exterior()) {
        const Vertex bottom_mid{t.arrangement.n, 0};
        return Point{kMargin + m.scale * (t.arrangement.n / 2.0),
                     m.y(bottom_mid) + 0.9 * m.scale};
    }
    double sx = 0, sy = 0;
    int c = 0;
    const auto add = [&](const Vertex& v) {
        sx += m.x(v);
        sy += m.y(v);
        ++c;
    };
    if (id.is_hole()) {
        const SubTriangle h = t.arrangement.holes[static_cast<std::size_t>(id.a)];
        for (const Vertex& v : corner_vertices(h)) add(v);
    } else {
        for (const Vertex& v : rhombus_corners(id.down(), t.rhombi.at(id.down()))) add(v);
    }
    return Point{sx / c, sy / c};
}

void line(std::ostream& os, Point a, Point b, const char* stroke, double width,
          const char* extra = "") {
    os << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x)
       << "\" y2=\"" << num(b.y) << "\" stroke=\"" << stroke << "\" stroke-width=\""
       << num(width) << "\"" << extra << "/>\n";
}

}  // namespace

void render_svg(std::ostream& os, const Tiling& t, const RenderOptions& opts) {
    const int n = t.arrangement.n;
    const Mapper m{n, opts.scale};
    const double width = 2 * kMargin + opts.scale * n;
    const double height = 2 * kMargin + opts.scale * n * kRoot3Half +
                          (opts.overlay == Overlay::Graph ? 1.4 * opts.scale : 0.0);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
       << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << " "
       << num(height) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    for (const SubTriangle& h : t.arrangement.holes)
        polygon(os, m, corner_vertices(h), "#d9d9d9");
    for (const auto& [d, dir] : t.rhombi)
        polygon(os, m, rhombus_corners(d, dir), rhombus_fill(dir));
    // Outline of the whole triangle on top.
    {
        const std::array<Vertex, 3> big{Vertex{0, 0}, Vertex{n, 0}, Vertex{n, n}};
        polygon(os, m, big, "none", " fill-opacity=\"0\"");
    }

    if (opts.overlay == Overlay::Forced) {
        const ForcedReport rep = forced_segments_scc(t);
        for (const GridSegment& s : rep.segments)
            line(os, Point{m.x(s.a), m.y(s.a)}, Point{m.x(s.b), m.y(s.b)}, "#d62728",
                 3.5, " stroke-linecap=\"round\"");
    } else if (opts.overlay == Overlay::Depth) {
        const DepthField f = depth_field(t, opts.depth_ray);
        for (int row = 0; row <= n; ++row)
            for (int pos = 0; pos <= row; ++pos) {
                const Vertex v{row, pos};
                os << "<text x=\"" << num(m.x(v)) << "\" y=\"" << num(m.y(v) - 3)
                   << "\" font-size=\"" << num(0.28 * opts.scale)
                   << "\" text-anchor=\"middle\" fill=\"#1f3d7a\">"
                   << f.value[static_cast<std::size_t>(row)][static_cast<std::size_t>(pos)]
                   << "</text>\n";
            }
    } else if (opts.overlay == Overlay::Graph) {
        const RegionGraph g = build_region_graph(t);
        os << "<defs><marker id=\"arrow\" viewBox=\"0 0 8 8\" refX=\"7\" refY=\"4\" "
              "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">"
              "<path d=\"M0,0 L8,4 L0,8 z\" fill=\"#555555\"/></marker></defs>\n";
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            // Parallel edges collapse to one stroke; the count rides along.
            if (e > 0 && g.edges[e] == g.edges[e - 1]) continue;
            std::size_t mult = 1;
            while (e + mult < g.edges.size() && g.edges[e + mult] == g.edges[e]) ++mult;
            const Point a = region_center(m, t, g.edges[e].first);
            const Point b = region_center(m, t, g.edges[e].second);
            // Shorten towards the target so the arrowhead clears the dot.
            const double dx = b.x - a.x, dy = b.y - a.y;
            const double len = std::hypot(dx, dy);
            const double keep = len > 12 ? (len - 8) / len : 1.0;
            const Point tip{a.x + dx * keep, a.y + dy * keep};
            line(os, a, tip, "#555555", 1.4, " marker-end=\"url(#arrow)\"");
            if (mult > 1)
                os << "<text x=\"" << num((a.x + b.x) / 2) << "\" y=\""
                   << num((a.y + b.y) / 2 - 3) << "\" font-size=\""
                   << num(0.24 * opts.scale) << "\" fill=\"#555555\">x" << mult
                   << "</text>\n";
        }
        for (const RegionId& id : g.nodes) {
            const Point c = region_center(m, t, id);
            os << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y)
               << "\" r=\"3.5\" fill=\"" << (id.is_exterior() ? "#000000" : "#d62728")
               << "\"/>\n";
        }
    }
    os << "</svg>\n";
}

}  // namespace tritile
