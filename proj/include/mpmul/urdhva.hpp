#pragma once

#include <array>
#include <cstdint>

#include "mpmul/int128.hpp"

namespace mpmul {

inline constexpr int kUrdhvaMaxWidth = 64;

// Vertical-and-crosswise column sums before any carry propagation:
// sums[k] = sum over i+j == k of a_i * b_j, for k in [0, 2n-2].
// The tallest column is column n-1 with n partial products.
struct ColumnSet {
  int width = 0;  // n
  std::array<uint32_t, 2 * kUrdhvaMaxWidth - 1> sums{};

  int count() const { return 2 * width - 1; }
};

// Widths are validated to [1, 64] and operands to their declared width;
// violations throw errc::invalid_width.
ColumnSet urdhva_columns(uint64_t a, uint64_t b, int width);

// Carry-propagating accumulation, LSB to MSB: product bit k is the LSB of
// (sums[k] + carry-in), the rest of the sum chains into column k+1, and the
// carry left after the last column lands above it.
uint128 urdhva_reduce(const ColumnSet& columns);

uint128 urdhva_mul(uint64_t a, uint64_t b, int width);

struct UrdhvaStats {
  int adders;             // 2n - 2 ripple-connected adders
  int max_column_height;  // n partial products in the middle column
};

UrdhvaStats urdhva_stats(int width);  // width >= 2

}  // namespace mpmul
