#pragma once

#include <cstdint>
#include <string_view>

#include "mpmul/mode_control.hpp"
#include "mpmul/word_format.hpp"

namespace mpmul {

// Exactly one class describes every result.
enum class ResultClass { Zero, Infinity, NaN, Denormal, Normal };

struct ProductResult {
  Word67 word;
  ResultClass flags;
  int norm_shift;  // 0 or 1, right shift taken during normalization
  ModeId resolved_mode;
};

unsigned sign_mul(unsigned sign_a, unsigned sign_b);

// Unclamped biased exponent of the product: e1 + e2 - bias. Overflow and
// underflow are left to classify().
int exponent_add(uint32_t e1, uint32_t e2, const ModeConfig& cfg);

struct Normalized {
  uint64_t mantissa;  // m-bit fraction; dropped low bits are discarded
  int exponent;
  int shift;          // 0 or 1
};

// The product of two (m+1)-bit significands occupies at most 2m+2 bits.
// When bit 2m+1 is set the value is in [2, 4): shift right once and bump
// the exponent; otherwise the value is already in [1, 2). The fraction is
// cut to m bits toward zero in both cases.
Normalized normalize(uint128 product, int exponent, int mantissa_width);

// Output classification on the computed exponent/mantissa pair:
//   e <= 0 and mantissa == 0  -> Zero
//   e <= 0 and mantissa != 0  -> Denormal (stored with exponent field 0)
//   e >= all-ones, mantissa == 0 -> Infinity
//   e >= all-ones, mantissa != 0 -> NaN
//   otherwise                    -> Normal
ResultClass classify(int exponent, uint64_t mantissa, const ModeConfig& cfg);

// Full pipeline: decode, resolve mode, truncate, multiply significands,
// normalize, classify, encode. Operand specials short-circuit: NaN wins,
// Inf times zero is NaN, Inf times anything finite nonzero is Inf, and a
// zero operand makes the product zero. The result sign is always the XOR
// of the operand signs.
ProductResult multiply(Word67 a, Word67 b,
                       Rounding rounding = Rounding::Truncate);

std::string_view result_class_name(ResultClass c);

}  // namespace mpmul
