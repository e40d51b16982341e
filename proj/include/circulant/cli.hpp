#pragma once

#include <iosfwd>

namespace circulant {

/// Runs one CLI invocation. Returns 0 on success, 2 on usage errors and 1 on
/// computation errors; diagnostics go to err only when the result is non-zero.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace circulant
