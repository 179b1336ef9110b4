#pragma once

#include <charconv>
#include <string>

namespace spikeauct {

/// Shortest decimal form that parses back to the same double. Used wherever
/// machine-readable output must preserve full precision.
inline std::string format_full(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace spikeauct
