#pragma once

#include <bit>
#include <cstdint>
#include <string>

namespace mpmul {

// Products of two 64-bit operands need the full 128-bit range, so every
// multi-word value in the library is carried as unsigned __int128.
using uint128 = unsigned __int128;

constexpr uint128 make_u128(uint64_t hi, uint64_t lo) {
  return (static_cast<uint128>(hi) << 64) | lo;
}

constexpr uint64_t lo64(uint128 v) { return static_cast<uint64_t>(v); }
constexpr uint64_t hi64(uint128 v) { return static_cast<uint64_t>(v >> 64); }

constexpr int bit_width_128(uint128 v) {
  return hi64(v) != 0 ? 64 + std::bit_width(hi64(v)) : std::bit_width(lo64(v));
}

// Fixed-width lowercase hex, zero-padded to `digits` characters.
std::string to_hex(uint128 v, int digits);

}  // namespace mpmul
