#ifndef LIEFRAME_CLI_HPP
#define LIEFRAME_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lieframe {

/// Command-line entry point, separated from main() so the tests can drive it
/// in process. Exit codes: 0 success, 1 verification failure, 2 input/usage
/// error.
int cli_run(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace lieframe

#endif
