#pragma once

#include <iosfwd>
#include <string>

#include "tritile/tiling.hpp"

namespace tritile {

// Text format, one statement per line, '#' starts a comment:
//   holey v1
//   n <size>
//   hole <r> <i> <k>
//   rhombus <r> <i> <N|W|E>
// Cell lines may come in any order; output is sorted by (r, i).  A file
// without rhombus lines is a bare arrangement.

char dir_letter(Dir);
Dir dir_from_letter(char);  // throws ValidationError

struct ParsedFile {
    HoleArrangement arrangement;
    bool has_rhombi = false;
    std::map<DownCell, Dir> rhombi;
};

// Throws ParseError with a 1-based line number on malformed input and
// ValidationError when the arrangement itself is broken.
ParsedFile parse_file(std::istream&);

HoleArrangement parse_arrangement(std::istream&);  // rhombus lines rejected
Tiling parse_subdivision(std::istream&);           // checked as a full subdivision

void serialize(std::ostream&, const HoleArrangement&);
void serialize(std::ostream&, const Tiling&);

std::string to_string(const HoleArrangement&);
std::string to_string(const Tiling&);

}  // namespace tritile
