#pragma once

#include <cstdint>
#include <utility>

#include "mpmul/errors.hpp"
#include "mpmul/word_format.hpp"

namespace mpmul {

enum class Rounding {
  Truncate,     // drop the low fraction bits (default, matches the hardware)
  NearestEven,  // round to nearest, ties to the even kept bit
};

class ModeMismatchError : public Error {
 public:
  ModeMismatchError(ModeId a, ModeId b);

  ModeId a_mode;
  ModeId b_mode;
};

struct ModeResolution {
  ModeId mode;      // concrete mode, never Auto
  bool auto_chosen;
  // Per-operand significant mantissa widths that drove an auto decision;
  // {0, 0} when the operands named the mode explicitly.
  std::pair<int, int> per_operand_bits;
};

// Number of mantissa bits that must survive truncation for the value to be
// preserved: the prefix ends at the lowest 1-bit that is followed only by
// zeros (equivalently by a run of six or more zeros reaching no further 1),
// so the width is 52 minus that bit's position. Zero mantissa -> 0.
int significant_width(uint64_t mantissa_field);

// Smallest mode whose mantissa accommodates both operands, using the
// strict thresholds: w < 8 -> M2, w < 16 -> M3, w < 23 -> M4, w < 36 -> M5,
// anything wider -> M6.
ModeId auto_select(uint64_t mantissa_a, uint64_t mantissa_b);

// Requires matching mode bits (throws ModeMismatchError otherwise) and runs
// auto selection when both operands say Auto.
ModeResolution resolve_mode(const DecodedWord& a, const DecodedWord& b);
ModeResolution resolve_mode(Word67 a, Word67 b);

struct Truncated {
  uint64_t mantissa;            // m-bit fraction
  unsigned exponent_increment;  // 1 when rounding carried out of the fraction
};

// Reduces the stored 52-bit fraction to the mode's m bits. Truncation keeps
// the high m bits; nearest-even may round up and, on carry out of bit m-1,
// returns a zero fraction with exponent_increment set. Mode 6 is a no-op.
Truncated truncate_operand(uint64_t mantissa_field, const ModeConfig& cfg,
                           Rounding rounding = Rounding::Truncate);

}  // namespace mpmul
