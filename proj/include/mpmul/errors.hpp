#pragma once

#include <stdexcept>
#include <string>

namespace mpmul {

enum class errc {
  invalid_mode,           // mode select bits 110 or 111
  field_overflow,         // encode field wider than its slot
  auto_unresolved,        // mode_config asked for Auto
  mode_mismatch,          // operands carry different mode select bits
  exponent_out_of_range,  // custom mode with high exponent bits set
  odd_width,              // split of an odd operand width
  invalid_width,          // width outside the supported range
  parse_error,            // malformed hex word or batch line
};

// Every library failure surfaces as Error; code() identifies the violated
// contract so callers never have to match on message text.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace mpmul
