#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symdyn::cli {

/// Runs the command line tool on `args` (without the program name).
/// Exit codes: 0 property holds / success, 1 refuted, 2 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symdyn::cli
