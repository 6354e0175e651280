#ifndef GRAPHENT_CLI_CLI_H
#define GRAPHENT_CLI_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace graphent {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 1,
    kExitBoundsDiffer = 2,
    kExitCssDisagree = 3,
    kExitVerifyFailed = 4,
};

/// Runs the tool on args (args[0] is the program name). Normal output goes to
/// `out` unless --out names a file; diagnostics go to `err`. `in` backs the
/// "-" input.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace graphent

#endif
