#include "mpmul/selftest.hpp"

#include <ostream>
#include <random>

#include "mpmul/fp_multiplier.hpp"
#include "mpmul/karatsuba.hpp"
#include "mpmul/urdhva.hpp"
#include "mpmul/word_format.hpp"

namespace mpmul {

namespace {

constexpr uint64_t kSeed = 0x5eedf00d5eedf00d;

void report(std::ostream& out, SelftestReport& rep, const char* name,
            uint64_t cases, uint64_t failures) {
  ++rep.suites;
  if (failures != 0) {
    ++rep.failures;
  }
  out << "suite=" << name << " cases=" << cases
      << " result=" << (failures == 0 ? "PASS" : "FAIL") << '\n';
}

uint64_t exhaustive_column_suite(
    int width, const std::function<uint128(uint64_t, uint64_t, int)>& mul) {
  uint64_t failures = 0;
  const uint64_t limit = uint64_t{1} << width;
  for (uint64_t a = 0; a < limit; ++a) {
    for (uint64_t b = 0; b < limit; ++b) {
      if (mul(a, b, width) != static_cast<uint128>(a) * b) {
        ++failures;
      }
    }
  }
  return failures;
}

uint64_t random_karatsuba_suite(uint64_t cases_per_width, uint64_t* total) {
  static constexpr int kWidths[] = {8, 9, 16, 17, 24, 32, 37, 53, 64};
  std::mt19937_64 rng(kSeed);
  uint64_t failures = 0;
  for (const int width : kWidths) {
    const uint64_t mask =
        width == 64 ? ~uint64_t{0} : (uint64_t{1} << width) - 1;
    for (uint64_t i = 0; i < cases_per_width; ++i) {
      const uint64_t x = rng() & mask;
      const uint64_t y = rng() & mask;
      if (karatsuba(x, y, width) != static_cast<uint128>(x) * y) {
        ++failures;
      }
    }
    *total += cases_per_width;
  }
  return failures;
}

// Expected mode-6 product bits from a plain 128-bit significand multiply
// truncated toward zero; operands must be normal with an in-range result.
uint64_t mode6_expected_bits(uint64_t a_bits, uint64_t b_bits) {
  const uint64_t sign = (a_bits ^ b_bits) & (uint64_t{1} << 63);
  const uint32_t ea = static_cast<uint32_t>(a_bits >> 52) & 0x7ff;
  const uint32_t eb = static_cast<uint32_t>(b_bits >> 52) & 0x7ff;
  const uint64_t sig_a = (uint64_t{1} << 52) | (a_bits & kMantissaFieldMask);
  const uint64_t sig_b = (uint64_t{1} << 52) | (b_bits & kMantissaFieldMask);
  const uint128 p = static_cast<uint128>(sig_a) * sig_b;

  uint64_t exponent = ea + eb - 1023;
  uint64_t fraction;
  if ((p >> 105) & 1) {
    ++exponent;
    fraction = static_cast<uint64_t>(p >> 53) & kMantissaFieldMask;
  } else {
    fraction = static_cast<uint64_t>(p >> 52) & kMantissaFieldMask;
  }
  return sign | (exponent << 52) | fraction;
}

uint64_t mode6_truncation_suite(uint64_t cases) {
  std::mt19937_64 rng(kSeed ^ 0xabcdef);
  std::uniform_int_distribution<uint32_t> exp_dist(512, 1530);
  uint64_t failures = 0;
  for (uint64_t i = 0; i < cases; ++i) {
    const uint64_t a_bits = (rng() & ((uint64_t{1} << 63) | kMantissaFieldMask)) |
                            (static_cast<uint64_t>(exp_dist(rng)) << 52);
    const uint64_t b_bits = (rng() & ((uint64_t{1} << 63) | kMantissaFieldMask)) |
                            (static_cast<uint64_t>(exp_dist(rng)) << 52);
    const Word67 a = encode_word(ModeId::M6, a_bits >> 63,
                                 static_cast<uint32_t>(a_bits >> 52) & 0x7ff,
                                 a_bits & kMantissaFieldMask);
    const Word67 b = encode_word(ModeId::M6, b_bits >> 63,
                                 static_cast<uint32_t>(b_bits >> 52) & 0x7ff,
                                 b_bits & kMantissaFieldMask);
    const ProductResult r = multiply(a, b);
    if (r.flags != ResultClass::Normal ||
        lo64(r.word.raw) != mode6_expected_bits(a_bits, b_bits)) {
      ++failures;
    }
  }
  return failures;
}

}  // namespace

SelftestReport run_selftest(std::ostream& out, const SelftestOptions& options) {
  const auto column_mul =
      options.column_mul
          ? options.column_mul
          : [](uint64_t a, uint64_t b, int w) { return urdhva_mul(a, b, w); };

  SelftestReport rep;

  report(out, rep, "urdhva-4x4-exhaustive", 256,
         exhaustive_column_suite(4, column_mul));
  report(out, rep, "urdhva-8x8-exhaustive", 65536,
         exhaustive_column_suite(8, column_mul));

  uint64_t karatsuba_cases = 0;
  const uint64_t per_width = options.quick ? 2000 : 20000;
  const uint64_t karatsuba_failures =
      random_karatsuba_suite(per_width, &karatsuba_cases);
  report(out, rep, "karatsuba-random", karatsuba_cases, karatsuba_failures);

  const uint64_t mode6_cases = options.quick ? 10000 : 200000;
  report(out, rep, "mode6-truncate", mode6_cases,
         mode6_truncation_suite(mode6_cases));

  out << "selftest: " << (rep.ok() ? "PASS" : "FAIL") << '\n';
  return rep;
}

}  // namespace mpmul
