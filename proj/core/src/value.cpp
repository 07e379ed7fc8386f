#include "lctrs/value.hpp"

namespace lctrs {

BitVec BitVec::from_signed(int width, const Int& v) {
  Int modulus = Int{1} << width;
  Int r = v % modulus;
  if (r < 0) r += modulus;
  return {width, static_cast<std::uint64_t>(r)};
}

std::int64_t BitVec::to_signed() const {
  std::uint64_t sign_bit = std::uint64_t{1} << (width - 1);
  if (bits & sign_bit) {
    // value - 2^width, computed without overflow for width == 64
    return static_cast<std::int64_t>(bits | ~mask(width));
  }
  return static_cast<std::int64_t>(bits);
}

std::string TheoryValue::to_string() const {
  if (is_bool()) return as_bool() ? "true" : "false";
  if (is_int()) return as_int().str();
  return std::to_string(as_bitvec().to_signed());
}

}  // namespace lctrs
