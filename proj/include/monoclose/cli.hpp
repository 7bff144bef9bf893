#pragma once

#include <iosfwd>

namespace monoclose {

enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitPartial = 2, kExitViolation = 3 };

/// Entry point behind the `monoclose` executable. Reports go to `out`,
/// diagnostics and summaries to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace monoclose
