#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strew {

// Runs one CLI invocation (argv without the program name) against the
// given streams and returns the process exit code:
//   0  property holds / query derivable
//   1  property fails / not derivable
//   2  input or precondition error
//   3  inconclusive (termination neither certified nor assumed)
//   4  oracle cross-check disagreed with a decision procedure
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace strew
