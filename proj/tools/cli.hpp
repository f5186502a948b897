#ifndef PRISM_TOOLS_CLI_HPP
#define PRISM_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace prism::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_invalid = 1,
    exit_verification = 2,
};

// Runs the prism command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace prism::cli

#endif
