#pragma once

#include <string>
#include <vector>

namespace leibcoh {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// Run one command given argv-style arguments (program name excluded).
// Subcommands: check, cohomology, versal, classify, massey.
// Exit codes: 0 success, 2 parse/usage error, 3 precondition violation.
CliResult run_cli(const std::vector<std::string>& args);

} // namespace leibcoh
