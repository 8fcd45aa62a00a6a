#ifndef FEATHER_CLI_HPP
#define FEATHER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace feather {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitAborted = 3,  // budget exhausted or 128-bit overflow
};

/// Runs one command line. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace feather

#endif // FEATHER_CLI_HPP
