#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kbh::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseFailure = 1;
inline constexpr int kValidationFailure = 2;
inline constexpr int kInconsistent = 3;

/// Runs `kbhom <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kbh::cli
