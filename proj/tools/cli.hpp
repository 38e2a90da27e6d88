#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gw::cli {

// Dispatches one command line (without the program name). Returns 0 on
// success, 1 on domain errors, 2 on argument parse errors. All output is
// exact text on `out`; error messages go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gw::cli
