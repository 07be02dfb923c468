#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tracta {

// Parses and runs one command. Returns the process exit code: 0 on success,
// 1 on a parse error (bad usage, malformed input), 2 on an invariant
// violation (e.g. a non-trace-closed automaton supplied as recognizable),
// 3 when a resource budget is exceeded. Output goes to `out`, diagnostics
// to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tracta
