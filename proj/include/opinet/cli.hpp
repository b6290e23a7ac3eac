#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opinet::cli {

enum ExitCode : int {
    kOk = 0,
    kConfigError = 1,
    kDataError = 2,
    kIoError = 3,
};

inline constexpr const char* kToolName = "opinet";
inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one command line (without the program name). Data goes to `out`,
/// progress and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opinet::cli
