#pragma once

#include <iosfwd>

namespace twinwidth::cli {

/// Runs one command.  Exit codes: 0 success, 1 domain error or a claim that
/// does not hold, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace twinwidth::cli
