#include "tritile/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "tritile/errors.hpp"

namespace tritile {

char dir_letter(Dir d) {
    switch (d) {
        case Dir::N: return 'N';
        case Dir::W: return 'W';
        case Dir::E: return 'E';
    }
    return '?';
}

Dir dir_from_letter(char c) {
    switch (c) {
        case 'N': return Dir::N;
        case 'W': return Dir::W;
        case 'E': return Dir::E;
        default: throw ValidationError(std::string("unknown direction '") + c + "'");
    }
}

ParsedFile parse_file(std::istream& in) {
    ParsedFile out;
    std::optional<int> n;
    std::vector<SubTriangle> holes;
    bool saw_header = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (!saw_header) {
            std::string version;
            if (word != "holey" || !(ls >> version) || version != "v1")
                throw ParseError(lineno, "expected header 'holey v1'");
            saw_header = true;
            continue;
        }
        if (word == "n") {
            int value = 0;
            if (!(ls >> value) || value < 1) throw ParseError(lineno, "bad size");
            if (n) throw ParseError(lineno, "duplicate size line");
            n = value;
        } else if (word == "hole") {
            if (!n) throw ParseError(lineno, "hole before the size line");
            SubTriangle t;
            if (!(ls >> t.r >> t.i >> t.k)) throw ParseError(lineno, "bad hole line");
            if (!tri_valid(t, *n)) throw ParseError(lineno, "hole outside the triangle");
            holes.push_back(t);
        } else if (word == "rhombus") {
            if (!n) throw ParseError(lineno, "rhombus before the size line");
            DownCell d;
            std::string letter;
            if (!(ls >> d.r >> d.i >> letter) || letter.size() != 1)
                throw ParseError(lineno, "bad rhombus line");
            if (!down_valid(d, *n)) throw ParseError(lineno, "rhombus outside the triangle");
            Dir dir;
            try {
                dir = dir_from_letter(letter[0]);
            } catch (const ValidationError& e) {
                throw ParseError(lineno, e.what());
            }
            if (!out.rhombi.emplace(d, dir).second)
                throw ParseError(lineno, "duplicate rhombus cell");
            out.has_rhombi = true;
        } else {
            throw ParseError(lineno, "unknown statement '" + word + "'");
        }
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing tokens");
    }
    if (!saw_header) throw ParseError(lineno, "missing header 'holey v1'");
    if (!n) throw ParseError(lineno, "missing size line");
    out.arrangement = make_arrangement(*n, holes);
    return out;
}

HoleArrangement parse_arrangement(std::istream& in) {
    ParsedFile f = parse_file(in);
    if (f.has_rhombi) throw ValidationError("expected a bare arrangement, found rhombi");
    return std::move(f.arrangement);
}

Tiling parse_subdivision(std::istream& in) {
    ParsedFile f = parse_file(in);
    Tiling t{std::move(f.arrangement), std::move(f.rhombi)};
    const TilingCheck check = validate_tiling(t);
    if (!check.ok) throw ValidationError(check.message);
    return t;
}

void serialize(std::ostream& os, const HoleArrangement& arr) {
    os << "holey v1\n" << "n " << arr.n << "\n";
    for (const SubTriangle& h : arr.holes)
        os << "hole " << h.r << " " << h.i << " " << h.k << "\n";
}

void serialize(std::ostream& os, const Tiling& t) {
    serialize(os, t.arrangement);
    for (const auto& [d, dir] : t.rhombi)
        os << "rhombus " << d.r << " " << d.i << " " << dir_letter(dir) << "\n";
}

std::string to_string(const HoleArrangement& arr) {
    std::ostringstream os;
    serialize(os, arr);
    return os.str();
}

std::string to_string(const Tiling& t) {
    std::ostringstream os;
    serialize(os, t);
    return os.str();
}

}  // namespace tritile
