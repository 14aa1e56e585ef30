#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdga::cli {

// Dispatch a full command line (without argv[0]). Returns the process exit
// code: 0 success, 1 mathematical failure or unsupported input, 2 usage or
// parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdga::cli
