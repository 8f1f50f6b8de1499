#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bch::cli {

// Parses and runs one command line (without the program name) against the
// given output and error streams. Returns the process exit code:
//   0 success, 1 verification failure, 2 usage error, 3 backend overflow.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bch::cli
