#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "mpmul/int128.hpp"

namespace mpmul {

// 67-bit operand word, numbered from bit 0 at the LSB:
//
//   bits 66..64   mode select
//   bit  63       sign
//   bits 62..52   exponent field (11 bits; custom modes use the low 8)
//   bits 51..0    mantissa field (fraction, no hidden bit)
//
// The low 64 bits coincide with the IEEE-754 binary64 layout, so a mode-6
// word is a double with three mode bits stacked on top.
inline constexpr int kWordBits = 67;
inline constexpr int kModeFieldBits = 3;
inline constexpr int kExponentFieldBits = 11;
inline constexpr int kMantissaFieldBits = 52;
inline constexpr uint64_t kMantissaFieldMask =
    (uint64_t{1} << kMantissaFieldBits) - 1;
inline constexpr uint32_t kExponentFieldMask = (1u << kExponentFieldBits) - 1;
inline constexpr int kWordHexDigits = 17;  // 68 bits, leading digit <= 7

struct Word67 {
  uint128 raw = 0;

  friend bool operator==(const Word67&, const Word67&) = default;
};

enum class ModeId : uint8_t {
  Auto = 0b000,  // controller picks one of M2..M6 from the mantissas
  M2 = 0b001,    //  8-bit mantissa
  M3 = 0b010,    // 16-bit mantissa
  M4 = 0b011,    // 23-bit mantissa (single precision)
  M5 = 0b100,    // 36-bit mantissa
  M6 = 0b101,    // 52-bit mantissa (double precision)
};

struct ModeConfig {
  int mantissa_width;     // m, fraction bits without the hidden bit
  int exponent_width;     // 8 for custom modes, 11 for mode 6
  uint32_t bias;          // 127 or 1023
  uint32_t exp_all_ones;  // 2^exponent_width - 1, Inf/NaN exponent pattern
};

// Raw field split of a word; the mantissa is kept at full stored width,
// truncation to the mode's m bits happens later in the pipeline.
struct DecodedWord {
  ModeId mode;
  unsigned sign;
  uint32_t exponent_field;
  uint64_t mantissa_field;
};

// Operand after mode resolution and truncation: mantissa_field holds the
// mode's m fraction bits right-aligned, still without the hidden bit.
struct FpOperand {
  unsigned sign;
  uint32_t exponent_field;
  uint64_t mantissa_field;
  ModeId mode;
};

// Splits a word into fields. Throws errc::invalid_mode for the two unused
// mode encodings and errc::exponent_out_of_range when a custom-mode word
// has any of the high three exponent bits set.
DecodedWord decode_word(Word67 w);

// Packs fields positionally. Throws errc::field_overflow when a field does
// not fit its slot; mode-dependent exponent range checks are decode's job.
Word67 encode_word(ModeId mode, unsigned sign, uint32_t exponent_field,
                   uint64_t mantissa_field);

// Static per-mode parameters. Throws errc::auto_unresolved for Auto.
ModeConfig mode_config(ModeId mode);

// (m+1)-bit significand: hidden bit prepended unless the exponent field is
// zero (denormal operands carry no hidden bit).
uint64_t significand_of(const FpOperand& op, const ModeConfig& cfg);

std::string_view mode_name(ModeId mode);
ModeId mode_from_name(std::string_view name);  // throws errc::parse_error

// External text form: exactly 17 lowercase hex digits (68 bits, the top bit
// always zero). Parsing accepts either letter case but no prefixes.
std::string to_hex(Word67 w);
Word67 word_from_hex(std::string_view text);  // throws errc::parse_error

}  // namespace mpmul
