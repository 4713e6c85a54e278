#pragma once

#include <iosfwd>

namespace moduli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

/// Entry point of the `moduli` command line tool, with injectable streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace moduli
