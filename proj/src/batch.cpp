#include "mpmul/batch.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "mpmul/errors.hpp"
#include "mpmul/fp_multiplier.hpp"

namespace mpmul {

std::optional<BatchRecord> parse_batch_line(const std::string& line,
                                            int line_no) {
  std::string body = line;
  if (const auto hash = body.find('#'); hash != std::string::npos) {
    body.erase(hash);
  }

  std::istringstream fields(body);
  std::vector<std::string> tokens;
  for (std::string tok; fields >> tok;) {
    tokens.push_back(tok);
  }
  if (tokens.empty()) {
    return std::nullopt;
  }
  if (tokens.size() > 3) {
    throw Error(errc::parse_error,
                "line " + std::to_string(line_no) +
                    ": expected '<a> <b> [expected]', got " +
                    std::to_string(tokens.size()) + " fields");
  }
  if (tokens.size() < 2) {
    throw Error(errc::parse_error,
                "line " + std::to_string(line_no) +
                    ": expected '<a> <b> [expected]', got 1 field");
  }

  try {
    BatchRecord rec;
    rec.line_no = line_no;
    rec.a = word_from_hex(tokens[0]);
    rec.b = word_from_hex(tokens[1]);
    if (tokens.size() == 3) {
      rec.expected = word_from_hex(tokens[2]);
    }
    return rec;
  } catch (const Error& e) {
    throw Error(errc::parse_error,
                "line " + std::to_string(line_no) + ": " + e.what());
  }
}

BatchSummary run_batch(std::istream& in, std::ostream& out,
                       const BatchOptions& options) {
  BatchSummary summary;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    std::optional<BatchRecord> rec;
    try {
      rec = parse_batch_line(line, line_no);
      if (!rec) {
        continue;
      }
      ++summary.total;
      const ProductResult r = multiply(rec->a, rec->b, options.rounding);
      out << to_hex(r.word) << " flags=" << result_class_name(r.flags)
          << " mode=" << mode_name(r.resolved_mode)
          << " shift=" << r.norm_shift;
      if (rec->expected) {
        const bool match = r.word == *rec->expected;
        out << (match ? "  PASS" : "  FAIL");
        match ? ++summary.pass : ++summary.fail;
      }
      out << '\n';
    } catch (const Error& e) {
      if (rec) {
        // The record parsed but did not multiply; parse failures already
        // carry their line number in the message.
        out << "line " << line_no << ": error: " << e.what() << '\n';
      } else {
        out << "error: " << e.what() << '\n';
        ++summary.total;
      }
      ++summary.errors;
      ++summary.fail;
      if (options.strict) {
        out << "total=" << summary.total << " pass=" << summary.pass
            << " fail=" << summary.fail << '\n';
        throw;
      }
    }
  }
  out << "total=" << summary.total << " pass=" << summary.pass
      << " fail=" << summary.fail << '\n';
  return summary;
}

}  // namespace mpmul
