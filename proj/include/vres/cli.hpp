#pragma once

// Command-line front end. Payload goes to `out`, diagnostics to `err`.
//
// Exit codes: 0 success, 1 internal inconsistency, 2 argument or domain
// error, 3 conditional output refused, 4 no generic point sample found.

#include <iosfwd>
#include <string>
#include <vector>

namespace vres {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConditional = 3;
inline constexpr int kExitGenericity = 4;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vres
