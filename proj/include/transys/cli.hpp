#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace transys {

// Runs the command-line interface. Exit codes: 0 success, 1 verification
// failure (a machine-readable report goes to `out`), 2 malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace transys
