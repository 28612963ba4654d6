#include "ioncoupler/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <string_view>

namespace ioncoupler::log {

namespace {

level parse_threshold() {
    const char* env = std::getenv("COUPLER_LOG");
    if (!env)
        return level::warn;
    const std::string_view value(env);
    if (value == "error") return level::error;
    if (value == "warn") return level::warn;
    if (value == "info") return level::info;
    if (value == "debug") return level::debug;
    std::fprintf(stderr, "[warn] COUPLER_LOG=%s not recognized; using warn\n", env);
    return level::warn;
}

const char* tag(level severity) {
    switch (severity) {
    case level::error: return "error";
    case level::warn: return "warn";
    case level::info: return "info";
    case level::debug: return "debug";
    }
    return "?";
}

} // namespace

level threshold() {
    static const level cached = parse_threshold();
    return cached;
}

void emit(level severity, const std::string& message) {
    if (severity > threshold())
        return;
    std::fprintf(stderr, "[%s] %s\n", tag(severity), message.c_str());
}

} // namespace ioncoupler::log
