#include "oligosim/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <string_view>

namespace oligosim {

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* raw = std::getenv("OLIGOSIM_LOG");
    const std::string_view value = raw == nullptr ? "" : raw;
    if (value == "quiet") {
      return LogLevel::Quiet;
    }
    if (value == "debug") {
      return LogLevel::Debug;
    }
    return LogLevel::Info;
  }();
  return level;
}

void log_info(const std::string& message) {
  if (log_level() >= LogLevel::Info) {
    std::fprintf(stderr, "%s\n", message.c_str());
  }
}

void log_debug(const std::string& message) {
  if (log_level() >= LogLevel::Debug) {
    std::fprintf(stderr, "%s\n", message.c_str());
  }
}

}  // namespace oligosim
