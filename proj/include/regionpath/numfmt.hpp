#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace regionpath {

// Shortest round-trip decimal form of v. Locale-free and deterministic, so
// emitted files compare byte-identical across runs.
inline std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace regionpath
