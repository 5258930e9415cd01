#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace modheat {

inline constexpr std::string_view kVersion = "0.1.0";

// FNV-1a 64-bit, used to fingerprint configs in output metadata.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string to_hex(std::uint64_t v);

inline std::string config_hash(std::string_view canonical) { return to_hex(fnv1a64(canonical)); }

}  // namespace modheat
