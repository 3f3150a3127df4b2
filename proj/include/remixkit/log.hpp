#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace remixkit::log {

enum class Level { quiet = 0, info = 1, debug = 2 };

// REMIXKIT_LOG=quiet|info|debug (default info); messages go to stderr.
inline Level level() {
  static const Level lv = [] {
    if (const char* env = std::getenv("REMIXKIT_LOG")) {
      if (std::strcmp(env, "quiet") == 0) return Level::quiet;
      if (std::strcmp(env, "debug") == 0) return Level::debug;
    }
    return Level::info;
  }();
  return lv;
}

template <typename... Args>
void info(const char* fmt, Args... args) {
  if (level() >= Level::info) {
    std::fprintf(stderr, "[remixkit] ");
    std::fprintf(stderr, fmt, args...);
    std::fputc('\n', stderr);
  }
}

template <typename... Args>
void debug(const char* fmt, Args... args) {
  if (level() >= Level::debug) {
    std::fprintf(stderr, "[remixkit:debug] ");
    std::fprintf(stderr, fmt, args...);
    std::fputc('\n', stderr);
  }
}

template <typename... Args>
void warn(const char* fmt, Args... args) {
  if (level() >= Level::info) {
    std::fprintf(stderr, "[remixkit:warn] ");
    std::fprintf(stderr, fmt, args...);
    std::fputc('\n', stderr);
  }
}

}  // namespace remixkit::log
