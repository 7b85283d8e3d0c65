#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpcert::cli {

/// Exit codes: 0 success or pass, 1 verification failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gpcert::cli
