#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace barnette {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitError = 2;

/// Runs one command line (without the program name). Reports go to `out` as
/// JSON lines, a human summary to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace barnette
