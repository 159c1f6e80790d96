#ifndef SAUDIT_TOOLS_CLI_H_
#define SAUDIT_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace saudit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // module error or failed verification
inline constexpr int kExitUsage = 2;

// Runs one subcommand. `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace saudit::cli

#endif  // SAUDIT_TOOLS_CLI_H_
