#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace suw::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,   // bad flags, unparsable word or rank
    kDomainError = 2,  // rank out of range, symbol out of range, empty set, failed verify
};

/// Runs one command line. `args` excludes the program name. Results go to
/// `out`, one-line diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace suw::cli
