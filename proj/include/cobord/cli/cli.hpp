#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cobord::cli {

// Exit codes of run().
enum ExitCode { ok = 0, identity_failure = 1, usage_error = 2 };

// Runs one command line (without the program name); the report goes to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cobord::cli
