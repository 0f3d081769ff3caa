#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bpk {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInvalidInput = 2,
  kExitCapExceeded = 3,
};

// Runs `bpk <args...>` (args excludes the program name). "-" as a path means
// `in` for inputs and `out` for outputs. Errors go to `err` as JSON objects.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace bpk
