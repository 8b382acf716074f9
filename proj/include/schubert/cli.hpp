#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert {

// Runs one command-line invocation (arguments without the program name) and
// writes the result to `out`. Returns the process exit status: 0 on success,
// 2 for invocation mistakes, 1 for failures while computing. Diagnostics go
// to stderr so the result stream stays byte-deterministic.
int run_command(const std::vector<std::string>& args, std::ostream& out);

}  // namespace schubert
