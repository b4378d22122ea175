#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symmp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Structured output goes
/// to `out`, diagnostics and usage text to `err`. Returns 0 on success, 1 when
/// a verification fails and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symmp::cli
