#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genome::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line (without the program name). Output is a pure
/// function of the arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genome::cli
