#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mgh {

// Dispatches one command line (without the program name).  Returns the
// process exit status: 0 success, 1 domain error, 2 malformed input or
// usage error.  Diagnostics go to err, results to out (or to --out <path>).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mgh
