#pragma once

#include <iosfwd>

namespace tropbundle::cli {

/// Exit codes: 0 success or affirmative verdict, 1 invalid bundle or negative
/// verdict, 2 usage or parse error.
enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

/// Runs `tropbundle <validate|info|iso|section|pullback> ...`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tropbundle::cli
