#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tritile {

// Whole command-line driver, streams injected for testing.  args is argv
// without the program name.  Returns the process exit code: 0 when the
// command succeeds and any checked property holds, 1 when the property
// fails (invalid subdivision, not unique, no tiling, unavailable flip,
// unreachable target), 2 on usage, parse or validation errors, 3 when a
// resource cap is hit.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace tritile
