#pragma once

#include <ostream>
#include <span>
#include <string>

namespace apn::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics and progress to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace apn::cli
