#ifndef DTX_TOOLS_CLI_HPP
#define DTX_TOOLS_CLI_HPP

#include <ostream>

namespace dtx::cli {

/// Process exit codes.
enum Exit : int {
    kOk = 0,
    kUsage = 1,
    kInvalidInput = 2,
    kOracleMismatch = 3,
    kBudgetExceeded = 4,
};

/// Runs the `dtx` command line. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace dtx::cli

#endif
