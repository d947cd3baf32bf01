#pragma once

#include <ostream>

namespace coaw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntimeError = 1;
inline constexpr int kExitConfigError = 2;

/// Entry point of the `coaw` tool: `run`, `oracle` and `metrics` subcommands.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coaw::cli
