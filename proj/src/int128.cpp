#include "mpmul/int128.hpp"

namespace mpmul {

std::string to_hex(uint128 v, int digits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(static_cast<size_t>(digits), '0');
  for (int i = digits - 1; i >= 0 && v != 0; --i) {
    out[static_cast<size_t>(i)] = kDigits[static_cast<unsigned>(v & 0xf)];
    v >>= 4;
  }
  return out;
}

}  // namespace mpmul
