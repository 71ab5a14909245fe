#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lc {

// Exit codes shared by every subcommand.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitError = 2 };

// Runs the listcolor command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lc
