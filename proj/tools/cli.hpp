#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dessinry::cli {

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 domain error (diagnostic on err), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dessinry::cli
