#pragma once

#include <stdexcept>
#include <string>

namespace tritile {

// Malformed domain object: bad coordinates, overlapping holes, broken tiling.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested flip does not exist in the given tiling.
struct FlipError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Search or enumeration exceeded its configured budget.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text input rejected; line is 1-based.
struct ParseError : std::runtime_error {
    ParseError(int line_number, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
    int line;
};

}  // namespace tritile
