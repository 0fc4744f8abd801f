#ifndef FILIPPOV_CLI_HPP
#define FILIPPOV_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace filippov {

/// Exit codes: 0 success, 1 a checked claim is false, 2 bad input.
enum ExitCode { kExitOk = 0, kExitFalse = 1, kExitInput = 2 };

/// Runs one command line; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace filippov

#endif
