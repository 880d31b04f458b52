#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace swarlab {

// Fixed-width unsigned integer with exact two's complement wraparound at an
// arbitrary positive bit width. Bit positions are numbered from 0 at the
// least significant end, so position p carries weight 2^p.
//
// Values are immutable: every operation returns a fresh word of the same
// width and arithmetic is always modulo 2^width. Mixing operands of
// different widths is a programming error and throws std::invalid_argument.
// Widths need not be powers of two (36- and 62-bit words are first-class);
// algorithms that require power-of-two widths check that themselves.
class BitWord {
 public:
  static BitWord zero(unsigned width);
  static BitWord one(unsigned width);
  static BitWord ones(unsigned width);
  static BitWord with_bit(unsigned width, unsigned position);
  // Throws std::invalid_argument when value has bits at or above `width`.
  static BitWord from_u64(unsigned width, std::uint64_t value);

  // Canonical text form is hex without prefix; "0x" hex and "0o" octal
  // prefixes are accepted on input.
  static BitWord parse(std::string_view text, unsigned width);
  static BitWord from_hex(std::string_view digits, unsigned width);
  static BitWord from_octal(std::string_view digits, unsigned width);

  unsigned width() const { return width_; }
  bool is_zero() const;
  int bit(unsigned position) const;

  // Minimal lowercase hex digits, most significant first, "0" for zero.
  std::string to_hex() const;
  // Whole value as a host integer; throws std::overflow_error when the
  // value does not fit in 64 bits.
  std::uint64_t to_u64() const;
  // Reads `count` (<= 64) bits starting at `lsb` as an integer.
  std::uint64_t extract_bits(unsigned lsb, unsigned count) const;

  BitWord add(const BitWord& other) const;
  BitWord sub(const BitWord& other) const;
  BitWord band(const BitWord& other) const;
  BitWord bor(const BitWord& other) const;
  BitWord bxor(const BitWord& other) const;
  BitWord bnot() const;
  BitWord shl(unsigned k) const;  // logical shift, zero fill, 0 <= k < width
  BitWord shr(unsigned k) const;
  // Remainder modulo a small host-word constant (modulus >= 2).
  std::uint64_t rem(std::uint64_t modulus) const;

  friend BitWord operator+(const BitWord& a, const BitWord& b) { return a.add(b); }
  friend BitWord operator-(const BitWord& a, const BitWord& b) { return a.sub(b); }
  friend BitWord operator&(const BitWord& a, const BitWord& b) { return a.band(b); }
  friend BitWord operator|(const BitWord& a, const BitWord& b) { return a.bor(b); }
  friend BitWord operator^(const BitWord& a, const BitWord& b) { return a.bxor(b); }
  friend BitWord operator~(const BitWord& a) { return a.bnot(); }

  bool operator==(const BitWord& other) const = default;

 private:
  explicit BitWord(unsigned width);
  void mask_top();
  void require_same_width(const BitWord& other) const;

  unsigned width_ = 0;
  std::vector<std::uint64_t> limbs_;  // least significant limb first
};

}  // namespace swarlab
