#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bitflip {

// Runs one command-line invocation (arguments without the program name) and
// writes the JSON report to out. Returns the process exit code: 0 for
// success/pass, 1 for a verified failure (counterexamples found, decode did
// not succeed, certificate failed), 2 for usage or format errors, 3 when an
// enumeration budget was exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bitflip
