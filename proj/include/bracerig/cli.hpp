#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bracerig {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitRefusal = 3;

/// Entry point of the bracerig tool. args excludes the program name. "-" as
/// an input path reads `in`.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bracerig
