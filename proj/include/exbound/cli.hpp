#pragma once

// Command-line front end. run() is the whole program minus main(), so tests
// can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace exbound::cli {

enum ExitCode : int { ok = 0, input_error = 1, refused = 2 };

/// Environment variable naming a JSON config file with default settings.
inline constexpr const char* kConfigEnv = "EXBOUND_CONFIG";

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exbound::cli
