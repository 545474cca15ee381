#ifndef SHG_CLI_HPP_
#define SHG_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace shg {

// Exit codes: 0 when every check passes or the answer was computed, 1 when a
// mathematical check failed (the report carries the witness), 2 on bad input
// or usage.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2 };

// Runs one `shg` invocation. args excludes the program name.
int run_command(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace shg

#endif  // SHG_CLI_HPP_
