#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "mpmul/mode_control.hpp"
#include "mpmul/word_format.hpp"

namespace mpmul {

// One batch input line: "<a_hex> <b_hex> [expected_hex]". A '#' starts a
// comment that runs to the end of the line; blank lines are skipped.
struct BatchRecord {
  int line_no = 0;
  Word67 a;
  Word67 b;
  std::optional<Word67> expected;
};

struct BatchOptions {
  Rounding rounding = Rounding::Truncate;
  bool strict = false;  // rethrow the first per-line error instead of continuing
};

struct BatchSummary {
  int total = 0;   // records attempted (bad lines included)
  int pass = 0;    // records whose result matched the expected word
  int fail = 0;    // expectation mismatches plus errored records
  int errors = 0;  // parse or multiply failures
};

// nullopt for blank/comment lines; throws errc::parse_error (message carries
// the line number) for malformed records.
std::optional<BatchRecord> parse_batch_line(const std::string& line,
                                            int line_no);

// Writes one result line per record, "  PASS"/"  FAIL" appended when an
// expected word is present, then a final "total=N pass=P fail=F" line.
// Errored lines are reported as "line N: error: ..." and counted as fail.
BatchSummary run_batch(std::istream& in, std::ostream& out,
                       const BatchOptions& options);

}  // namespace mpmul
