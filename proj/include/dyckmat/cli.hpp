#pragma once

#include <iosfwd>

namespace dyckmat {

/// Command line entry point. Data goes to `out`, diagnostics and notes to
/// `err`. Returns the process exit code: 0 on success or a passing check,
/// 1 on a failed verification or cross-check, 2 on a usage error, 3 when a
/// resource guard refuses the request.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dyckmat
