#include "mpmul/word_format.hpp"

#include <cassert>

#include "mpmul/errors.hpp"

namespace mpmul {

namespace {

constexpr uint128 kWordMask = (static_cast<uint128>(1) << kWordBits) - 1;

bool is_custom_mode(ModeId mode) {
  return mode == ModeId::M2 || mode == ModeId::M3 || mode == ModeId::M4 ||
         mode == ModeId::M5;
}

int hex_digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

DecodedWord decode_word(Word67 w) {
  assert((w.raw & ~kWordMask) == 0);

  const unsigned mode_bits = static_cast<unsigned>(w.raw >> 64) & 0x7;
  if (mode_bits > static_cast<unsigned>(ModeId::M6)) {
    throw Error(errc::invalid_mode,
                "invalid mode select bits " + std::to_string(mode_bits));
  }

  DecodedWord d;
  d.mode = static_cast<ModeId>(mode_bits);
  d.sign = static_cast<unsigned>(w.raw >> 63) & 1;
  d.exponent_field = static_cast<uint32_t>(w.raw >> kMantissaFieldBits) &
                     kExponentFieldMask;
  d.mantissa_field = lo64(w.raw) & kMantissaFieldMask;

  // Custom modes interpret only the low 8 exponent bits; a word carrying
  // more exponent than that cannot mean what it says.
  if (is_custom_mode(d.mode) && (d.exponent_field >> 8) != 0) {
    throw Error(errc::exponent_out_of_range,
                "exponent field " + std::to_string(d.exponent_field) +
                    " does not fit the 8-bit exponent of " +
                    std::string(mode_name(d.mode)));
  }

  assert(d.sign <= 1);
  assert(d.exponent_field <= kExponentFieldMask);
  assert(d.mantissa_field <= kMantissaFieldMask);
  return d;
}

Word67 encode_word(ModeId mode, unsigned sign, uint32_t exponent_field,
                   uint64_t mantissa_field) {
  if (sign > 1) {
    throw Error(errc::field_overflow, "sign must be 0 or 1");
  }
  if (exponent_field > kExponentFieldMask) {
    throw Error(errc::field_overflow,
                "exponent field " + std::to_string(exponent_field) +
                    " exceeds 11 bits");
  }
  if (mantissa_field > kMantissaFieldMask) {
    throw Error(errc::field_overflow, "mantissa field exceeds 52 bits");
  }

  Word67 w;
  w.raw = (static_cast<uint128>(static_cast<unsigned>(mode)) << 64) |
          (static_cast<uint128>(sign) << 63) |
          (static_cast<uint128>(exponent_field) << kMantissaFieldBits) |
          mantissa_field;
  return w;
}

ModeConfig mode_config(ModeId mode) {
  switch (mode) {
    case ModeId::M2:
      return {8, 8, 127, 255};
    case ModeId::M3:
      return {16, 8, 127, 255};
    case ModeId::M4:
      return {23, 8, 127, 255};
    case ModeId::M5:
      return {36, 8, 127, 255};
    case ModeId::M6:
      return {52, 11, 1023, 2047};
    case ModeId::Auto:
      break;
  }
  throw Error(errc::auto_unresolved,
              "auto mode has no configuration until it is resolved");
}

uint64_t significand_of(const FpOperand& op, const ModeConfig& cfg) {
  assert(op.mantissa_field < (uint64_t{1} << cfg.mantissa_width));
  const uint64_t hidden = op.exponent_field != 0
                              ? uint64_t{1} << cfg.mantissa_width
                              : uint64_t{0};
  return hidden | op.mantissa_field;
}

std::string_view mode_name(ModeId mode) {
  switch (mode) {
    case ModeId::Auto:
      return "Auto";
    case ModeId::M2:
      return "M2";
    case ModeId::M3:
      return "M3";
    case ModeId::M4:
      return "M4";
    case ModeId::M5:
      return "M5";
    case ModeId::M6:
      return "M6";
  }
  return "?";
}

ModeId mode_from_name(std::string_view name) {
  if (name == "Auto" || name == "auto") return ModeId::Auto;
  if (name == "M2" || name == "m2") return ModeId::M2;
  if (name == "M3" || name == "m3") return ModeId::M3;
  if (name == "M4" || name == "m4") return ModeId::M4;
  if (name == "M5" || name == "m5") return ModeId::M5;
  if (name == "M6" || name == "m6") return ModeId::M6;
  throw Error(errc::parse_error,
              "unknown mode '" + std::string(name) +
                  "' (expected Auto or M2..M6)");
}

std::string to_hex(Word67 w) { return to_hex(w.raw, kWordHexDigits); }

Word67 word_from_hex(std::string_view text) {
  if (text.size() != kWordHexDigits) {
    throw Error(errc::parse_error,
                "word must be exactly 17 hex digits, got " +
                    std::to_string(text.size()));
  }
  uint128 raw = 0;
  for (char c : text) {
    const int v = hex_digit_value(c);
    if (v < 0) {
      throw Error(errc::parse_error,
                  std::string("invalid hex digit '") + c + "' in word");
    }
    raw = (raw << 4) | static_cast<unsigned>(v);
  }
  if ((raw & ~kWordMask) != 0) {
    throw Error(errc::parse_error,
                "word value exceeds 67 bits (leading digit must be <= 7)");
  }
  return Word67{raw};
}

}  // namespace mpmul
