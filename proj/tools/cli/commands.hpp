#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace brl::cli {

inline constexpr int kSchemaVersion = 1;

// Exit codes: 0 success (warnings included), 2 usage or domain error,
// 3 numerical failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

// Runs one command line, excluding the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brl::cli
