#ifndef MIXEDPOLY_TOOLS_CLI_APP_HPP
#define MIXEDPOLY_TOOLS_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mixedpoly::cli {

/// Runs the command line with args[0] as the program name. Results go to
/// out, diagnostics to err. Returns 0 on success or all-pass, 1 on a
/// verification or evaluation failure, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mixedpoly::cli

#endif
