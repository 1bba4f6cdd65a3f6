#include "mpmul/mode_control.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace mpmul {

ModeMismatchError::ModeMismatchError(ModeId a, ModeId b)
    : Error(errc::mode_mismatch,
            "mode select error: " + std::string(mode_name(a)) + " vs " +
                std::string(mode_name(b))),
      a_mode(a),
      b_mode(b) {}

int significant_width(uint64_t mantissa_field) {
  assert(mantissa_field <= kMantissaFieldMask);
  if (mantissa_field == 0) return 0;
  // A set bit qualifies as the end of the significant prefix when only
  // zeros follow it (toward the LSB) or when at least six zeros separate it
  // from the next lower 1. The lowest set bit always satisfies the first
  // condition and sits below every other candidate, so the prefix always
  // ends exactly there.
  const int lowest = std::countr_zero(mantissa_field);
  return kMantissaFieldBits - lowest;
}

ModeId auto_select(uint64_t mantissa_a, uint64_t mantissa_b) {
  const int w =
      std::max(significant_width(mantissa_a), significant_width(mantissa_b));
  if (w < 8) return ModeId::M2;
  if (w < 16) return ModeId::M3;
  if (w < 23) return ModeId::M4;
  if (w < 36) return ModeId::M5;
  return ModeId::M6;
}

ModeResolution resolve_mode(const DecodedWord& a, const DecodedWord& b) {
  if (a.mode != b.mode) {
    throw ModeMismatchError(a.mode, b.mode);
  }
  if (a.mode != ModeId::Auto) {
    return {a.mode, false, {0, 0}};
  }
  ModeResolution r;
  r.mode = auto_select(a.mantissa_field, b.mantissa_field);
  r.auto_chosen = true;
  r.per_operand_bits = {significant_width(a.mantissa_field),
                        significant_width(b.mantissa_field)};
  return r;
}

ModeResolution resolve_mode(Word67 a, Word67 b) {
  return resolve_mode(decode_word(a), decode_word(b));
}

Truncated truncate_operand(uint64_t mantissa_field, const ModeConfig& cfg,
                           Rounding rounding) {
  assert(mantissa_field <= kMantissaFieldMask);
  const int drop = kMantissaFieldBits - cfg.mantissa_width;
  if (drop == 0) {
    return {mantissa_field, 0};  // mode 6 keeps every stored bit
  }

  uint64_t kept = mantissa_field >> drop;
  if (rounding == Rounding::Truncate) {
    return {kept, 0};
  }

  const uint64_t guard = (mantissa_field >> (drop - 1)) & 1;
  const uint64_t sticky = mantissa_field & ((uint64_t{1} << (drop - 1)) - 1);
  if (guard && (sticky != 0 || (kept & 1))) {
    ++kept;
    if (kept == (uint64_t{1} << cfg.mantissa_width)) {
      // Fraction rounded up to 1.0: the significand renormalizes to a bare
      // hidden bit one binade up.
      return {0, 1};
    }
  }
  return {kept, 0};
}

}  // namespace mpmul
