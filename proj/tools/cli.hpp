#ifndef RIMWALK_TOOLS_CLI_HPP
#define RIMWALK_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace rimwalk::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,  // verification mismatch or conjecture violation
  kUsage = 2,     // bad arguments or violated precondition
};

/// Runs the command line `args` (args[0] is the program name), writing data
/// to `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace rimwalk::cli

#endif  // RIMWALK_TOOLS_CLI_HPP
