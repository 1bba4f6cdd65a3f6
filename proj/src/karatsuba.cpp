#include "mpmul/karatsuba.hpp"

#include <algorithm>
#include <string>

#include "mpmul/errors.hpp"
#include "mpmul/urdhva.hpp"

namespace mpmul {

namespace {

void check_width(int width) {
  if (width < 1 || width > kKaratsubaMaxWidth) {
    throw Error(errc::invalid_width,
                "multiplier width " + std::to_string(width) +
                    " outside [1, 64]");
  }
}

void check_operand(uint64_t v, int width) {
  if (width < 64 && (v >> width) != 0) {
    throw Error(errc::invalid_width,
                "operand wider than the declared " + std::to_string(width) +
                    " bits");
  }
}

uint64_t low_mask(int bits) { return (uint64_t{1} << bits) - 1; }

uint128 recurse(uint64_t x, uint64_t y, int width, int depth,
                KaratsubaTrace* trace) {
  if (width <= kKaratsubaBaseWidth) {
    if (trace != nullptr) {
      ++trace->base_calls;
      trace->max_depth = std::max(trace->max_depth, depth);
    }
    return urdhva_mul(x, y, kKaratsubaBaseWidth);
  }

  const int padded = width + (width & 1);
  const int half = padded / 2;
  const auto [x_high, x_low] = split(x, padded);
  const auto [y_high, y_low] = split(y, padded);

  const uint128 hh = recurse(x_high, y_high, half, depth + 1, trace);
  const uint128 ll = recurse(x_low, y_low, half, depth + 1, trace);

  // The half sums can carry into bit `half`. Peeling the carries keeps the
  // sum recursion at the half width, so every level contributes exactly
  // three sub-multiplications; the peeled bits come back as shifted
  // conditional additions, which costs no extra multiplier.
  const uint64_t x_sum = x_high + x_low;
  const uint64_t y_sum = y_high + y_low;
  const uint64_t x_carry = x_sum >> half;
  const uint64_t y_carry = y_sum >> half;
  const uint64_t x_part = x_sum & low_mask(half);
  const uint64_t y_part = y_sum & low_mask(half);

  uint128 sum_product = recurse(x_part, y_part, half, depth + 1, trace);
  if (x_carry) sum_product += static_cast<uint128>(y_part) << half;
  if (y_carry) sum_product += static_cast<uint128>(x_part) << half;
  if (x_carry & y_carry) sum_product += static_cast<uint128>(1) << (2 * half);

  const uint128 middle = sum_product - hh - ll;
  return (hh << padded) + (middle << half) + ll;
}

}  // namespace

std::pair<uint64_t, uint64_t> split(uint64_t x, int width) {
  if (width < 2 || width > kKaratsubaMaxWidth) {
    throw Error(errc::invalid_width,
                "split width " + std::to_string(width) + " outside [2, 64]");
  }
  if (width % 2 != 0) {
    throw Error(errc::odd_width,
                "cannot split an odd width of " + std::to_string(width));
  }
  check_operand(x, width);
  const int half = width / 2;
  return {x >> half, x & low_mask(half)};
}

uint128 karatsuba(uint64_t x, uint64_t y, int width, KaratsubaTrace* trace) {
  check_width(width);
  check_operand(x, width);
  check_operand(y, width);
  return recurse(x, y, width, 0, trace);
}

MulStats karatsuba_stats(int width) {
  check_width(width);
  // Mirrors the recursion: ceil-halve until the base width is reached.
  int depth = 0;
  for (int w = width; w > kKaratsubaBaseWidth; w = (w + 1) / 2) {
    ++depth;
  }
  uint64_t base_multiplies = 1;
  for (int i = 0; i < depth; ++i) {
    base_multiplies *= 3;
  }
  const uint64_t internal_nodes = (base_multiplies - 1) / 2;
  return {width, depth, base_multiplies, 6 * internal_nodes};
}

}  // namespace mpmul
