#include "mpmul/urdhva.hpp"

#include "mpmul/errors.hpp"

namespace mpmul {

namespace {

void check_width(int width) {
  if (width < 1 || width > kUrdhvaMaxWidth) {
    throw Error(errc::invalid_width,
                "column multiplier width " + std::to_string(width) +
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

}  // namespace

ColumnSet urdhva_columns(uint64_t a, uint64_t b, int width) {
  check_width(width);
  check_operand(a, width);
  check_operand(b, width);

  ColumnSet cs;
  cs.width = width;
  for (int i = 0; i < width; ++i) {
    const uint32_t ai = static_cast<uint32_t>((a >> i) & 1);
    if (ai == 0) continue;
    for (int j = 0; j < width; ++j) {
      cs.sums[static_cast<size_t>(i + j)] +=
          ai & static_cast<uint32_t>((b >> j) & 1);
    }
  }
  return cs;
}

uint128 urdhva_reduce(const ColumnSet& columns) {
  uint128 product = 0;
  uint64_t carry = 0;
  const int n = columns.count();
  for (int k = 0; k < n; ++k) {
    const uint64_t s = columns.sums[static_cast<size_t>(k)] + carry;
    product |= static_cast<uint128>(s & 1) << k;
    carry = s >> 1;
  }
  product |= static_cast<uint128>(carry) << n;
  return product;
}

uint128 urdhva_mul(uint64_t a, uint64_t b, int width) {
  return urdhva_reduce(urdhva_columns(a, b, width));
}

UrdhvaStats urdhva_stats(int width) {
  if (width < 2 || width > kUrdhvaMaxWidth) {
    throw Error(errc::invalid_width,
                "adder count defined for widths in [2, 64], got " +
                    std::to_string(width));
  }
  return {2 * width - 2, width};
}

}  // namespace mpmul
