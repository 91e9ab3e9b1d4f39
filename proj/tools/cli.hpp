#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qdef::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitProperty = 1;
inline constexpr int kExitInput = 2;

// Runs one command. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdef::cli
