#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace metaplectic::cli {

/// Runs the command line given as argv-style arguments (program name
/// excluded).  Returns the process exit code: 0 success, 1 verification
/// failure, 2 usage or parameter error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metaplectic::cli
