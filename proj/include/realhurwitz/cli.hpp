#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace realhurwitz::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kValidationError = 3,
    kBudgetExceeded = 4,
};

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Rebuilds the argument list of a command from the "query" object of its
// --json output (the whole document may be passed).
std::vector<std::string> args_from_json(const std::string& document);

}  // namespace realhurwitz::cli
