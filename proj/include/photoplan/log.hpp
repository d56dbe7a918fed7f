#ifndef PHOTOPLAN_LOG_HPP
#define PHOTOPLAN_LOG_HPP

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace photoplan {

enum class LogLevel { kQuiet = 0, kInfo = 1, kDebug = 2 };

/// Verbosity comes from the PHOTOPLAN_LOG environment variable
/// (quiet | info | debug); default is info. Messages go to stderr so data
/// written to stdout stays machine readable.
inline LogLevel log_level() {
  static LogLevel level = [] {
    const char* env = std::getenv("PHOTOPLAN_LOG");
    if (env == nullptr) return LogLevel::kInfo;
    if (std::strcmp(env, "quiet") == 0) return LogLevel::kQuiet;
    if (std::strcmp(env, "debug") == 0) return LogLevel::kDebug;
    return LogLevel::kInfo;
  }();
  return level;
}

template <typename... Args>
void log_info(const char* fmt, Args... args) {
  if (log_level() >= LogLevel::kInfo) {
    std::fprintf(stderr, "[photoplan] ");
    std::fprintf(stderr, fmt, args...);
    std::fprintf(stderr, "\n");
  }
}

template <typename... Args>
void log_debug(const char* fmt, Args... args) {
  if (log_level() >= LogLevel::kDebug) {
    std::fprintf(stderr, "[photoplan:debug] ");
    std::fprintf(stderr, fmt, args...);
    std::fprintf(stderr, "\n");
  }
}

}  // namespace photoplan

#endif  // PHOTOPLAN_LOG_HPP
