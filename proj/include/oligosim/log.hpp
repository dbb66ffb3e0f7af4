#pragma once

#include <string>

namespace oligosim {

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

// Verbosity comes from the OLIGOSIM_LOG environment variable (quiet, info,
// or debug; default info). Messages go to stderr so stdout stays clean for
// command output.
LogLevel log_level();

void log_info(const std::string& message);
void log_debug(const std::string& message);

}  // namespace oligosim
