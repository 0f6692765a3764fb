#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hia {

// Runs the hia command line (build / query / verify / bench / anchors).
// Returns the process exit code; all output goes to the given streams.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hia
