#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dtc {

/// Exit codes: 0 exact result or decided verdict, 1 error or rejected
/// certificate, 2 bounded result or budget exhausted.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

/// Runs one CLI invocation. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dtc
