#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nillat {

// Runs one command-line invocation; `args` excludes the program name and the
// report lands on `out` exactly as it would reach stdout. Returns the process
// exit code: 0 for success or a positive verdict, 1 for a negative or
// unknown verdict, 2 for invalid input or usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace nillat
