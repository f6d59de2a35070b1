#ifndef DICHI_PIPELINE_HPP
#define DICHI_PIPELINE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dichi {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitIo = 1,            // unreadable or malformed input, bad usage
    kExitNotHFree = 2,      // the forbidden pattern is present (witness printed)
    kExitInvalid = 3,       // verify-coloring rejected the coloring
    kExitPrecondition = 4,  // input well-formed but outside an operation's domain
};

/// Runs one subcommand; args exclude the program name.
int run_pipeline(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dichi

#endif
