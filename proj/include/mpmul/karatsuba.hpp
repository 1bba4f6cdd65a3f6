#pragma once

#include <cstdint>
#include <utility>

#include "mpmul/int128.hpp"

namespace mpmul {

// Recursion bottoms out in the 8-bit column multiplier.
inline constexpr int kKaratsubaBaseWidth = 8;
inline constexpr int kKaratsubaMaxWidth = 64;

struct MulStats {
  int operand_width;
  int depth;                // recursion levels above the base case
  uint64_t base_multiplies; // 3^depth leaf multiplications
  uint64_t add_ops;         // 6 per combine step per internal node
};

// Counters filled by an instrumented run; base_calls must come out equal to
// karatsuba_stats(width).base_multiplies.
struct KaratsubaTrace {
  uint64_t base_calls = 0;
  int max_depth = 0;
};

// (high, low) halves of an even-width operand. Throws errc::odd_width for
// odd widths and errc::invalid_width for width outside [2, 64] or an
// operand wider than declared.
std::pair<uint64_t, uint64_t> split(uint64_t x, int width);

// Recursive multiplier: widths of at most 8 go straight to the column
// multiplier, wider operands are padded to an even width, split, and
// combined as 2^n*HH + 2^(n/2)*(sum product - HH - LL) + LL. The carry bit
// of each half sum is peeled off before the middle recursion so that every
// level contributes exactly three sub-multiplications.
uint128 karatsuba(uint64_t x, uint64_t y, int width,
                  KaratsubaTrace* trace = nullptr);

MulStats karatsuba_stats(int width);

}  // namespace mpmul
