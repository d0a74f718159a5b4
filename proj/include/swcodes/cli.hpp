#pragma once

#include <string>
#include <vector>

namespace swcodes::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kParamError = 1;      // invalid or infeasible parameters
inline constexpr int kInputError = 2;      // malformed input line
inline constexpr int kIoError = 3;         // file open/read/write failure
inline constexpr int kDecodeError = 4;     // undecodable or malformed codeword
inline constexpr int kBudgetError = 5;     // enumeration/state budget exceeded

/// Entry point used by the binary and the tests; `args` excludes the program
/// name. Data goes to the --out stream, diagnostics to stderr.
int run(const std::vector<std::string>& args);

int run(int argc, const char* const* argv);

}  // namespace swcodes::cli
