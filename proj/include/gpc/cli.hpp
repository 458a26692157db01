#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpc::cli {

/// Exit codes of the `gpc` tool.
enum ExitCode : int {
    kOk = 0,
    kBoundViolated = 1,       ///< `stability` only
    kUsageError = 2,
    kDataError = 3,
    kHypothesisViolated = 4,
    kNumericalFailure = 5,    ///< quadrature budget exhausted
};

/// Runs one command line (args[0] is the program name). Everything destined for
/// stdout goes to `out`; diagnostics go to `err`. Files named with -o/--matching
/// are written through a temporary file and renamed into place.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpc::cli
