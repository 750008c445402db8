#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace geobench {

// Shortest decimal form that round-trips to the same double ("51.5007",
// "10", "-0.1246"). Manifest and report writers use this so re-parsing an
// emitted value recovers the input bit-for-bit.
inline std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

inline std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return std::string(buf);
}

}  // namespace geobench
