#include "mpmul/fp_multiplier.hpp"

#include <cassert>

#include "mpmul/errors.hpp"
#include "mpmul/karatsuba.hpp"

namespace mpmul {

namespace {

// Canonical NaN payload: top fraction bit set, which survives truncation to
// every mode width.
constexpr uint64_t kNanMantissaField = uint64_t{1} << (kMantissaFieldBits - 1);

uint64_t to_field(uint64_t mantissa, const ModeConfig& cfg) {
  // Custom-mode fractions live in the high m bits of the 52-bit slot.
  return mantissa << (kMantissaFieldBits - cfg.mantissa_width);
}

ProductResult special_result(ResultClass cls, ModeId mode, unsigned sign,
                             const ModeConfig& cfg) {
  uint32_t exponent = 0;
  uint64_t mantissa_field = 0;
  if (cls == ResultClass::Infinity || cls == ResultClass::NaN) {
    exponent = cfg.exp_all_ones;
  }
  if (cls == ResultClass::NaN) {
    mantissa_field = kNanMantissaField;
  }
  return {encode_word(mode, sign, exponent, mantissa_field), cls, 0, mode};
}

}  // namespace

unsigned sign_mul(unsigned sign_a, unsigned sign_b) {
  assert(sign_a <= 1 && sign_b <= 1);
  return sign_a ^ sign_b;
}

int exponent_add(uint32_t e1, uint32_t e2, const ModeConfig& cfg) {
  return static_cast<int>(e1) + static_cast<int>(e2) -
         static_cast<int>(cfg.bias);
}

Normalized normalize(uint128 product, int exponent, int mantissa_width) {
  const int m = mantissa_width;
  assert(product < (static_cast<uint128>(1) << (2 * m + 2)));

  const uint64_t fraction_mask = (uint64_t{1} << m) - 1;
  if ((product >> (2 * m + 1)) & 1) {
    // Product in [2, 4): one right shift renormalizes.
    const uint64_t mantissa =
        static_cast<uint64_t>(product >> (m + 1)) & fraction_mask;
    return {mantissa, exponent + 1, 1};
  }
  const uint64_t mantissa = static_cast<uint64_t>(product >> m) & fraction_mask;
  return {mantissa, exponent, 0};
}

ResultClass classify(int exponent, uint64_t mantissa, const ModeConfig& cfg) {
  if (exponent <= 0) {
    return mantissa == 0 ? ResultClass::Zero : ResultClass::Denormal;
  }
  if (exponent >= static_cast<int>(cfg.exp_all_ones)) {
    return mantissa == 0 ? ResultClass::Infinity : ResultClass::NaN;
  }
  return ResultClass::Normal;
}

ProductResult multiply(Word67 a, Word67 b, Rounding rounding) {
  const DecodedWord da = decode_word(a);
  const DecodedWord db = decode_word(b);
  const ModeResolution res = resolve_mode(da, db);
  const ModeConfig cfg = mode_config(res.mode);

  // Auto-resolved custom modes inherit the same 8-bit exponent limit that
  // decode enforces on explicitly custom words.
  if (res.auto_chosen && cfg.exponent_width == 8 &&
      ((da.exponent_field >> 8) != 0 || (db.exponent_field >> 8) != 0)) {
    throw Error(errc::exponent_out_of_range,
                "auto mode resolved to " + std::string(mode_name(res.mode)) +
                    " but an operand exponent does not fit 8 bits");
  }

  const unsigned sign = sign_mul(da.sign, db.sign);
  const Truncated ta = truncate_operand(da.mantissa_field, cfg, rounding);
  const Truncated tb = truncate_operand(db.mantissa_field, cfg, rounding);

  // Operand specials are judged on the stored exponent and the truncated
  // fraction: an all-ones exponent is Inf when the surviving fraction bits
  // are zero and NaN otherwise. Rounding increments never apply to them.
  const uint64_t a_kept = da.mantissa_field >>
                          (kMantissaFieldBits - cfg.mantissa_width);
  const uint64_t b_kept = db.mantissa_field >>
                          (kMantissaFieldBits - cfg.mantissa_width);
  const bool a_special = da.exponent_field == cfg.exp_all_ones;
  const bool b_special = db.exponent_field == cfg.exp_all_ones;
  const bool a_nan = a_special && a_kept != 0;
  const bool b_nan = b_special && b_kept != 0;
  const bool a_inf = a_special && a_kept == 0;
  const bool b_inf = b_special && b_kept == 0;
  const bool a_zero = da.exponent_field == 0 && ta.mantissa == 0 &&
                      ta.exponent_increment == 0;
  const bool b_zero = db.exponent_field == 0 && tb.mantissa == 0 &&
                      tb.exponent_increment == 0;

  if (a_nan || b_nan) {
    return special_result(ResultClass::NaN, res.mode, sign, cfg);
  }
  if (a_inf || b_inf) {
    const ResultClass cls =
        (a_zero || b_zero) ? ResultClass::NaN : ResultClass::Infinity;
    return special_result(cls, res.mode, sign, cfg);
  }
  if (a_zero || b_zero) {
    return special_result(ResultClass::Zero, res.mode, sign, cfg);
  }

  const uint32_t ea = da.exponent_field + ta.exponent_increment;
  const uint32_t eb = db.exponent_field + tb.exponent_increment;
  const FpOperand op_a{da.sign, ea, ta.mantissa, res.mode};
  const FpOperand op_b{db.sign, eb, tb.mantissa, res.mode};
  const uint64_t sig_a = significand_of(op_a, cfg);
  const uint64_t sig_b = significand_of(op_b, cfg);

  const uint128 product = karatsuba(sig_a, sig_b, cfg.mantissa_width + 1);
  const int e_raw = exponent_add(ea, eb, cfg);
  const Normalized norm = normalize(product, e_raw, cfg.mantissa_width);
  const ResultClass cls = classify(norm.exponent, norm.mantissa, cfg);

  uint32_t out_exponent = 0;
  uint64_t out_mantissa = 0;
  switch (cls) {
    case ResultClass::Zero:
      break;
    case ResultClass::Denormal:
      // Underflowed results keep the truncated fraction under a zero
      // exponent field; no gradual-underflow right shift is modeled.
      out_mantissa = norm.mantissa;
      break;
    case ResultClass::Infinity:
      out_exponent = cfg.exp_all_ones;
      break;
    case ResultClass::NaN:
      out_exponent = cfg.exp_all_ones;
      out_mantissa = norm.mantissa;
      break;
    case ResultClass::Normal:
      out_exponent = static_cast<uint32_t>(norm.exponent);
      out_mantissa = norm.mantissa;
      break;
  }

  const Word67 word =
      encode_word(res.mode, sign, out_exponent, to_field(out_mantissa, cfg));
  return {word, cls, norm.shift, res.mode};
}

std::string_view result_class_name(ResultClass c) {
  switch (c) {
    case ResultClass::Zero:
      return "Zero";
    case ResultClass::Infinity:
      return "Infinity";
    case ResultClass::NaN:
      return "NaN";
    case ResultClass::Denormal:
      return "Denormal";
    case ResultClass::Normal:
      return "Normal";
  }
  return "?";
}

}  // namespace mpmul
