#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewrank::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 1,      // unreadable input or bad arguments
    kUnsupported = 2,     // shape not handled, or a size cap was hit
    kVerifyFailed = 3,    // sweep counterexamples or an internal contradiction
};

/// Runs the command line `args` (args[0] is the program name). Reads "-"
/// inputs from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace skewrank::cli
