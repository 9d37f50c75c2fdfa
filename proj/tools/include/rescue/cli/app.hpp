#pragma once

#include <iosfwd>

namespace rescue::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;

/// Entry point for the `rescue` tool. Subcommands: evaluate, optimize,
/// simulate, positivity, figure. Standard input is read for `--scenario -`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace rescue::cli
