#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <variant>

namespace lctrs {

using Int = boost::multiprecision::cpp_int;

/// Fixed-width two's-complement bit pattern. Widths up to 64 are supported.
struct BitVec {
  int width = 0;
  std::uint64_t bits = 0;  // always < 2^width

  static std::uint64_t mask(int width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  }
  static BitVec from_bits(int width, std::uint64_t bits) { return {width, bits & mask(width)}; }
  static BitVec from_signed(int width, const Int& v);

  std::int64_t to_signed() const;
  std::uint64_t to_unsigned() const { return bits; }

  bool operator==(const BitVec&) const = default;
};

/// An element of some carrier set I_iota together with its kind:
/// a boolean, an unbounded integer, or a fixed-width bitvector.
class TheoryValue {
 public:
  TheoryValue() : v_(false) {}
  static TheoryValue boolean(bool b) { return TheoryValue(b); }
  static TheoryValue integer(Int i) { return TheoryValue(std::move(i)); }
  static TheoryValue bitvec(BitVec b) { return TheoryValue(b); }

  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_int() const { return std::holds_alternative<Int>(v_); }
  bool is_bitvec() const { return std::holds_alternative<BitVec>(v_); }

  bool as_bool() const { return std::get<bool>(v_); }
  const Int& as_int() const { return std::get<Int>(v_); }
  const BitVec& as_bitvec() const { return std::get<BitVec>(v_); }

  /// Canonical rendering: true/false, decimal integers, signed decimal for
  /// bitvectors (the value name used in terms and files).
  std::string to_string() const;

  bool operator==(const TheoryValue&) const = default;

 private:
  explicit TheoryValue(std::variant<bool, Int, BitVec> v) : v_(std::move(v)) {}
  std::variant<bool, Int, BitVec> v_;
};

}  // namespace lctrs
