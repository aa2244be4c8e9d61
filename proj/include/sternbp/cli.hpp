#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sternbp {

// Runs the command line given the arguments after the program name.
// Exit status: 0 success, 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace sternbp
