#include <doctest.h>

#include <random>

#include "mpmul/errors.hpp"
#include "mpmul/karatsuba.hpp"
#include "oracles.hpp"

using namespace mpmul;

TEST_CASE("split halves an even-width operand positionally") {
  CHECK(split(0xab, 8) == std::pair<uint64_t, uint64_t>{0xa, 0xb});
  CHECK(split(0, 8) == std::pair<uint64_t, uint64_t>{0, 0});
  CHECK(split(0xffff, 16) == std::pair<uint64_t, uint64_t>{0xff, 0xff});
  CHECK(split(0b11, 2) == std::pair<uint64_t, uint64_t>{1, 1});
  CHECK(split(~uint64_t{0}, 64) ==
        std::pair<uint64_t, uint64_t>{0xffffffff, 0xffffffff});
}

TEST_CASE("split rejects odd widths and range violations") {
  CHECK_THROWS_AS(split(0, 7), Error);
  try {
    split(0, 7);
  } catch (const Error& e) {
    CHECK(e.code() == errc::odd_width);
  }
  CHECK_THROWS_AS(split(0, 0), Error);
  CHECK_THROWS_AS(split(0, 66), Error);
  CHECK_THROWS_AS(split(0x10, 4), Error);  // operand wider than declared
}

TEST_CASE("directed products through the recursion") {
  CHECK(karatsuba(0, 0xff, 8) == 0);
  CHECK(karatsuba(0xff, 0xff, 8) == 0xfe01);
  CHECK(karatsuba(0xffff, 0xffff, 16) == oracle::mul(0xffff, 0xffff));
  const uint64_t m53 = (uint64_t{1} << 53) - 1;
  CHECK(karatsuba(m53, m53, 53) == oracle::mul(m53, m53));
  const uint64_t m64 = ~uint64_t{0};
  CHECK(karatsuba(m64, m64, 64) == oracle::mul(m64, m64));
  CHECK(karatsuba(1, 1, 64) == 1);
}

TEST_CASE("odd widths behave exactly like the padded even width") {
  // Padding adds a zero MSB, which cannot change the numeric product.
  std::mt19937_64 rng(201);
  for (int width : {9, 17, 37, 53, 63}) {
    for (int i = 0; i < 2000; ++i) {
      const uint64_t x = oracle::rand_bits(rng, width);
      const uint64_t y = oracle::rand_bits(rng, width);
      CHECK(karatsuba(x, y, width) == karatsuba(x, y, width + 1));
    }
  }
}

TEST_CASE("random products match native multiplication at every width") {
  std::mt19937_64 rng(202);
  for (int width : {8, 9, 16, 17, 24, 32, 37, 53, 64}) {
    for (int i = 0; i < 10000; ++i) {
      const uint64_t x = oracle::rand_bits(rng, width);
      const uint64_t y = oracle::rand_bits(rng, width);
      CAPTURE(width);
      CAPTURE(x);
      CAPTURE(y);
      REQUIRE(karatsuba(x, y, width) == oracle::mul(x, y));
    }
  }
}

TEST_CASE("products are commutative") {
  std::mt19937_64 rng(203);
  for (int i = 0; i < 5000; ++i) {
    const int width = 2 + static_cast<int>(rng() % 63);
    const uint64_t x = oracle::rand_bits(rng, width);
    const uint64_t y = oracle::rand_bits(rng, width);
    CHECK(karatsuba(x, y, width) == karatsuba(y, x, width));
  }
}

TEST_CASE("instrumented runs hit exactly the predicted number of leaves") {
  std::mt19937_64 rng(204);
  for (int width : {8, 16, 32, 53, 64}) {
    const MulStats stats = karatsuba_stats(width);
    for (int i = 0; i < 50; ++i) {
      KaratsubaTrace trace;
      const uint64_t x = oracle::rand_bits(rng, width);
      const uint64_t y = oracle::rand_bits(rng, width);
      karatsuba(x, y, width, &trace);
      CAPTURE(width);
      CHECK(trace.base_calls == stats.base_multiplies);
      CHECK(trace.max_depth == stats.depth);
    }
  }
}

TEST_CASE("structural counts per width") {
  struct Row {
    int width;
    int depth;
    uint64_t base;
    uint64_t adds;
  };
  constexpr Row kRows[] = {
      {8, 0, 1, 0},   {9, 1, 3, 6},   {16, 1, 3, 6},  {17, 2, 9, 24},
      {24, 2, 9, 24}, {32, 2, 9, 24}, {37, 3, 27, 78}, {53, 3, 27, 78},
      {64, 3, 27, 78},
  };
  for (const Row& r : kRows) {
    const MulStats s = karatsuba_stats(r.width);
    CAPTURE(r.width);
    CHECK(s.operand_width == r.width);
    CHECK(s.depth == r.depth);
    CHECK(s.base_multiplies == r.base);
    CHECK(s.add_ops == r.adds);
  }
}

TEST_CASE("structural counts follow the closed forms at every width") {
  uint64_t previous_base = 0;
  for (int width = 1; width <= 64; ++width) {
    const MulStats s = karatsuba_stats(width);
    // depth = number of halvings (rounding up) until the width fits the base.
    int depth = 0;
    for (int w = width; w > kKaratsubaBaseWidth; w = (w + 1) / 2) ++depth;
    CHECK(s.depth == depth);
    uint64_t base = 1;
    for (int d = 0; d < depth; ++d) base *= 3;
    CHECK(s.base_multiplies == base);
    CHECK(s.add_ops == 3 * (base - 1));  // 6 * (3^depth - 1) / 2
    CHECK(s.base_multiplies >= previous_base);  // monotone in width
    previous_base = s.base_multiplies;
  }
}

TEST_CASE("width validation") {
  CHECK_THROWS_AS(karatsuba(0, 0, 0), Error);
  CHECK_THROWS_AS(karatsuba(0, 0, 65), Error);
  CHECK_THROWS_AS(karatsuba(1 << 9, 0, 9), Error);  // operand too wide
  CHECK_THROWS_AS(karatsuba_stats(0), Error);
  CHECK_THROWS_AS(karatsuba_stats(65), Error);
  CHECK_NOTHROW(karatsuba_stats(1));
  CHECK_NOTHROW(karatsuba(1, 1, 1));
}
