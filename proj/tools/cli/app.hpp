#pragma once

#include <iosfwd>

namespace mbsr::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kLimit = 3, kVerifyFailed = 4 };

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mbsr::cli
