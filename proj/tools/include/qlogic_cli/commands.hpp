#pragma once

#include <iosfwd>

namespace qlogic::cli {

enum ExitCode : int { ok = 0, usage_error = 1, invariant_failure = 2 };

/// Full command-line front end; writes to `out`/`err` instead of the
/// process streams so tests can drive it in-process.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qlogic::cli
