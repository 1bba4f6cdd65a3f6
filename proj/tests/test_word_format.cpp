#include <doctest.h>

#include <random>

#include "mpmul/errors.hpp"
#include "mpmul/word_format.hpp"
#include "oracles.hpp"

using namespace mpmul;

namespace {

Word67 raw_word(uint128 v) { return Word67{v}; }

}  // namespace

TEST_CASE("decode splits the word into positional fields") {
  // mode 101, sign 1, exponent 0x7ff, mantissa all ones
  const uint128 raw = (uint128{0b101} << 64) | (uint128{1} << 63) |
                      (uint128{0x7ff} << 52) | kMantissaFieldMask;
  const DecodedWord d = decode_word(raw_word(raw));
  CHECK(d.mode == ModeId::M6);
  CHECK(d.sign == 1);
  CHECK(d.exponent_field == 0x7ff);
  CHECK(d.mantissa_field == kMantissaFieldMask);
}

TEST_CASE("decode of the zero word gives the auto mode and zero fields") {
  const DecodedWord d = decode_word(raw_word(0));
  CHECK(d.mode == ModeId::Auto);
  CHECK(d.sign == 0);
  CHECK(d.exponent_field == 0);
  CHECK(d.mantissa_field == 0);
}

TEST_CASE("all six defined mode encodings decode to the matching mode id") {
  for (unsigned bits = 0; bits <= 5; ++bits) {
    const DecodedWord d = decode_word(raw_word(uint128{bits} << 64));
    CHECK(static_cast<unsigned>(d.mode) == bits);
  }
}

TEST_CASE("reserved mode encodings are rejected") {
  for (unsigned bits : {6u, 7u}) {
    CHECK_THROWS_WITH_AS(decode_word(raw_word(uint128{bits} << 64)),
                         doctest::Contains("invalid mode"), Error);
    try {
      decode_word(raw_word(uint128{bits} << 64));
    } catch (const Error& e) {
      CHECK(e.code() == errc::invalid_mode);
    }
  }
}

TEST_CASE("custom modes reject exponents that need more than eight bits") {
  // Encoding happily stores an 11-bit exponent; decoding under M2..M5 must
  // reject anything above 255.
  for (ModeId mode : {ModeId::M2, ModeId::M3, ModeId::M4, ModeId::M5}) {
    const Word67 w = encode_word(mode, 0, 256, 0);
    try {
      decode_word(w);
      FAIL("expected exponent range error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::exponent_out_of_range);
    }
    CHECK_NOTHROW(decode_word(encode_word(mode, 0, 255, 0)));
  }
  CHECK_NOTHROW(decode_word(encode_word(ModeId::M6, 0, 2047, 0)));
}

TEST_CASE("encode rejects out-of-range field values") {
  CHECK_THROWS_AS(encode_word(ModeId::M6, 2, 0, 0), Error);
  CHECK_THROWS_AS(encode_word(ModeId::M6, 0, 2048, 0), Error);
  CHECK_THROWS_AS(encode_word(ModeId::M6, 0, 0, uint64_t{1} << 52), Error);
  try {
    encode_word(ModeId::M6, 0, 2048, 0);
  } catch (const Error& e) {
    CHECK(e.code() == errc::field_overflow);
  }
}

TEST_CASE("known encodings in external hex form") {
  CHECK(to_hex(encode_word(ModeId::Auto, 0, 0, 0)) == "00000000000000000");
  // one in double precision: exponent 1023, empty fraction
  CHECK(to_hex(encode_word(ModeId::M6, 0, 1023, 0)) == "53ff0000000000000");
  // one under the 8-bit-exponent modes: bias 127
  CHECK(to_hex(encode_word(ModeId::M2, 0, 127, 0)) == "107f0000000000000");
  CHECK(to_hex(encode_word(ModeId::M6, 1, 2047, uint64_t{1} << 51)) ==
        "5fff8000000000000");
}

TEST_CASE("hex parsing accepts either case and normalizes to lowercase") {
  const Word67 w = word_from_hex("53FF0000000000000");
  CHECK(to_hex(w) == "53ff0000000000000");
  CHECK(word_from_hex("53ff0000000000000").raw == w.raw);
}

TEST_CASE("hex parsing rejects malformed words") {
  CHECK_THROWS_AS(word_from_hex(""), Error);
  CHECK_THROWS_AS(word_from_hex("53ff"), Error);                    // short
  CHECK_THROWS_AS(word_from_hex("53ff00000000000000"), Error);      // long
  CHECK_THROWS_AS(word_from_hex("53fg0000000000000"), Error);       // bad char
  CHECK_THROWS_AS(word_from_hex("80000000000000000"), Error);       // bit 67
  CHECK_THROWS_AS(word_from_hex("53ff 000000000000"), Error);
  try {
    word_from_hex("80000000000000000");
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse_error);
  }
}

TEST_CASE("encode and decode invert each other over random fields") {
  std::mt19937_64 rng(0xd1ce5eed);
  constexpr ModeId kModes[] = {ModeId::Auto, ModeId::M2, ModeId::M3,
                               ModeId::M4,   ModeId::M5, ModeId::M6};
  for (int i = 0; i < 100000; ++i) {
    const ModeId mode = kModes[rng() % 6];
    const unsigned sign = rng() & 1;
    const bool custom = mode != ModeId::Auto && mode != ModeId::M6;
    const uint32_t exp =
        static_cast<uint32_t>(rng()) & (custom ? 0xff : 0x7ff);
    const uint64_t mant = oracle::rand_bits(rng, 52);
    const Word67 w = encode_word(mode, sign, exp, mant);
    const DecodedWord d = decode_word(w);
    CHECK(d.mode == mode);
    CHECK(d.sign == sign);
    CHECK(d.exponent_field == exp);
    CHECK(d.mantissa_field == mant);
    // External hex form round-trips as well.
    CHECK(word_from_hex(to_hex(w)).raw == w.raw);
  }
}

TEST_CASE("mode parameter table") {
  struct Row {
    ModeId mode;
    int m;
    int e;
    uint32_t bias;
  };
  constexpr Row kRows[] = {
      {ModeId::M2, 8, 8, 127},  {ModeId::M3, 16, 8, 127},
      {ModeId::M4, 23, 8, 127}, {ModeId::M5, 36, 8, 127},
      {ModeId::M6, 52, 11, 1023},
  };
  for (const Row& r : kRows) {
    const ModeConfig cfg = mode_config(r.mode);
    CHECK(cfg.mantissa_width == r.m);
    CHECK(cfg.exponent_width == r.e);
    CHECK(cfg.bias == r.bias);
    CHECK(cfg.exp_all_ones == (uint32_t{1} << r.e) - 1);
  }
  CHECK_THROWS_AS(mode_config(ModeId::Auto), Error);
}

TEST_CASE("significand attaches the hidden bit only for nonzero exponents") {
  const ModeConfig m2 = mode_config(ModeId::M2);
  auto op = [](uint32_t exp, uint64_t mant, ModeId mode) {
    return FpOperand{0, exp, mant, mode};
  };
  CHECK(significand_of(op(127, 0, ModeId::M2), m2) == 0x100);     // 1.0
  CHECK(significand_of(op(127, 0x80, ModeId::M2), m2) == 0x180);  // 1.5
  // Denormal operands carry no hidden bit.
  CHECK(significand_of(op(0, 0x80, ModeId::M2), m2) == 0x80);
  CHECK(significand_of(op(0, 0, ModeId::M2), m2) == 0);
  const ModeConfig m6 = mode_config(ModeId::M6);
  CHECK(significand_of(op(1023, 0, ModeId::M6), m6) == uint64_t{1} << 52);
}

TEST_CASE("mode names round-trip") {
  constexpr ModeId kModes[] = {ModeId::Auto, ModeId::M2, ModeId::M3,
                               ModeId::M4,   ModeId::M5, ModeId::M6};
  for (ModeId mode : kModes) {
    CHECK(mode_from_name(mode_name(mode)) == mode);
  }
  CHECK(mode_from_name("m4") == ModeId::M4);
  CHECK(mode_from_name("auto") == ModeId::Auto);
  CHECK_THROWS_AS(mode_from_name("M7"), Error);
  CHECK_THROWS_AS(mode_from_name(""), Error);
}
