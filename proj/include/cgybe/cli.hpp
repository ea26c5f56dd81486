#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cgybe {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
};

/// Runs the cgybe command line. args excludes the program name. Never throws:
/// malformed input is reported on err with kExitUsage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgybe
