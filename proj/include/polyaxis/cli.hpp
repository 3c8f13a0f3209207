#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyaxis {

// Runs one CLI invocation. args excludes the program name. Returns the
// process exit status: 0 success, 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace polyaxis
