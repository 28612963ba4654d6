#pragma once

#include <string>

namespace ioncoupler::log {

enum class level { error = 0, warn = 1, info = 2, debug = 3 };

/// Threshold parsed once from the COUPLER_LOG environment variable
/// (error|warn|info|debug); defaults to warn.
level threshold();

void emit(level severity, const std::string& message);

inline void error(const std::string& message) { emit(level::error, message); }
inline void warn(const std::string& message) { emit(level::warn, message); }
inline void info(const std::string& message) { emit(level::info, message); }
inline void debug(const std::string& message) { emit(level::debug, message); }

} // namespace ioncoupler::log
