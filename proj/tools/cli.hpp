#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cset::cli {

/// Exit codes: 0 success, 1 domain error (JSON error body on out),
/// 2 usage error (message on err).
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cset::cli
