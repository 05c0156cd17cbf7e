#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace bowtie {

// FNV-1a over raw bytes; used as the instance digest embedded in certificates.
std::uint64_t fnv1a64(std::string_view bytes);

// 16-hex-digit rendering of a digest.
std::string hex64(std::uint64_t v);

// splitmix64 step; used to derive per-part seeds for composite generators.
std::uint64_t splitmix64(std::uint64_t x);

// Packs an ordered pair (a < b) of 32-bit-safe ids into one map key.
inline std::uint64_t pair_key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

} // namespace bowtie
