#ifndef FGLOCUS_TOOLS_CLI_HPP
#define FGLOCUS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fglocus::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kMethodDisagreement = 2,
};

/// Runs the tool on `args` (without the program name). Input comes from the
/// named file, or `in` when no file (or "-") is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace fglocus::cli

#endif
