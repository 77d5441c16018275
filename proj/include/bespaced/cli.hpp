#ifndef BESPACED_CLI_HPP
#define BESPACED_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bespaced::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kParseFailure = 2,    // unreadable or malformed model file
  kShapeFailure = 3,    // model outside the fragment an operator needs
  kInvalidParameters = 4,
};

/// Runs one command.  `args` excludes the program name.  Models are read from
/// --in PATH, or from `in` when PATH is "-"; results go to `out` and
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bespaced::cli

#endif  // BESPACED_CLI_HPP
