#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zeno/cli/run_config.hpp"

namespace zeno::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

/// Parses `args` (without the program name) into a resolved, validated
/// config. Flags override values from --config. Throws ConfigError.
RunConfig parse_arguments(const std::vector<std::string>& args);

/// Full command-line entry point. CSV goes to --out or `out`; diagnostics to
/// `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zeno::cli
