#ifndef KCL_TOOLS_COMMANDS_HPP
#define KCL_TOOLS_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace kcl::cli {

enum ExitCode : int {
  kOk = 0,
  kBadArguments = 2,
  kParseError = 3,
  kTimeLimit = 4,
};

/// Runs `kcl <subcommand> ...`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kcl::cli

#endif  // KCL_TOOLS_COMMANDS_HPP
