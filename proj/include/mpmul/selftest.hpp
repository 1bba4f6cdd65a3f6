#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>

#include "mpmul/int128.hpp"

namespace mpmul {

struct SelftestOptions {
  bool quick = false;  // cut the randomized case counts

  // Multiplier exercised by the exhaustive column-multiplier suites.
  // Defaults to urdhva_mul; tests substitute a corrupted one to verify the
  // suites detect it.
  std::function<uint128(uint64_t, uint64_t, int)> column_mul;
};

struct SelftestReport {
  int suites = 0;
  int failures = 0;

  bool ok() const { return failures == 0; }
};

// Runs the built-in differential suites (exhaustive 4x4 and 8x8 column
// multiplier checks, randomized recursive-multiplier checks across widths,
// and the mode-6 truncation check against exact integer products), writing
// one "suite=... cases=... result=..." line per suite.
SelftestReport run_selftest(std::ostream& out,
                            const SelftestOptions& options = {});

}  // namespace mpmul
