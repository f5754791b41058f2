#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zm::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kInvalidTriple = 2;
inline constexpr int kBudgetExceeded = 3;
inline constexpr int kUsage = 64;
inline constexpr int kIoError = 73;

/// Runs zmtool with args (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zm::cli
