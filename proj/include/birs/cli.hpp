#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace birs {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Entry point of the `birs` command line tool. Subcommands: simulate,
// fit-null, score, detect, evaluate.
int cli_main(int argc, const char* const* argv);
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace birs
