#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace happy::cli {

// Parses and executes one command line (argv without the program name).
// Returns the process exit code: 0 success, 2 usage or bad input,
// 3 enumeration budget exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace happy::cli
