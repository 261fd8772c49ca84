#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace soakit::cli {

/// Exit codes: 0 passed / built, 1 verification failed, 2 usage or parameter error.
enum ExitCode : int { kPassed = 0, kFailed = 1, kUsage = 2 };

/// Runs one command line (args excludes the program name). Arrays go to out,
/// witnesses and diagnostics to err; the file name "-" reads from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace soakit::cli
