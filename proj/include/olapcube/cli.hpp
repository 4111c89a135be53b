#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace olapcube::cli {

// Exit codes shared by every subcommand.
constexpr int kOk = 0;
constexpr int kUsageError = 1;
constexpr int kDataError = 2;
constexpr int kOverflowError = 3;

// Runs one subcommand. `args` excludes the program name. All diagnostics are
// single lines on `err`; results go to `out` or to files named by flags.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace olapcube::cli
