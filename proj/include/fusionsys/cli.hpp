#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fusionsys/error.hpp"

namespace fusionsys {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitRejected = 1,
  kExitUsage = 2,
  kExitInconsistent = 3,
};

int exit_code_for(ErrorCode code);

// Runs one command; args excludes the program name. The JSON report goes to
// `out` (or the --out path), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fusionsys
