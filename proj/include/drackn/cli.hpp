#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace drackn {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFail = 1,    // verification or feasibility failure, with FAIL lines
  kExitFormat = 2,  // bad arguments or malformed input
  kExitInternal = 3,
};

/// Runs the `drackn` tool. `args` excludes the program name. FILE arguments
/// that are omitted or "-" read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace drackn
