#pragma once

#include <ostream>
#include <span>
#include <string>

namespace partid {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    exit_ok = 0,
    exit_inequality = 1,
    exit_usage = 2,
    exit_internal = 3,
};

/// Runs the CLI on `args` (without the program name). Output goes to `out`
/// unless --output names a file.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace partid
