#include "swarlab/bitword.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace swarlab {

namespace {

constexpr unsigned kLimbBits = 64;

unsigned limb_count(unsigned width) { return (width + kLimbBits - 1) / kLimbBits; }

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitWord::BitWord(unsigned width) : width_(width), limbs_(limb_count(width), 0) {
  if (width == 0) throw std::invalid_argument("BitWord width must be positive");
}

void BitWord::mask_top() {
  const unsigned top_bits = width_ % kLimbBits;
  if (top_bits != 0) limbs_.back() &= (~std::uint64_t{0}) >> (kLimbBits - top_bits);
}

void BitWord::require_same_width(const BitWord& other) const {
  if (width_ != other.width_)
    throw std::invalid_argument("BitWord width mismatch: " + std::to_string(width_) +
                                " vs " + std::to_string(other.width_));
}

BitWord BitWord::zero(unsigned width) { return BitWord(width); }

BitWord BitWord::one(unsigned width) {
  BitWord w(width);
  w.limbs_[0] = 1;
  return w;
}

BitWord BitWord::ones(unsigned width) {
  BitWord w(width);
  std::fill(w.limbs_.begin(), w.limbs_.end(), ~std::uint64_t{0});
  w.mask_top();
  return w;
}

BitWord BitWord::with_bit(unsigned width, unsigned position) {
  BitWord w(width);
  if (position >= width) throw std::invalid_argument("bit position out of range");
  w.limbs_[position / kLimbBits] = std::uint64_t{1} << (position % kLimbBits);
  return w;
}

BitWord BitWord::from_u64(unsigned width, std::uint64_t value) {
  BitWord w(width);
  if (width < kLimbBits && (value >> width) != 0)
    throw std::invalid_argument("value exceeds width " + std::to_string(width));
  w.limbs_[0] = value;
  return w;
}

BitWord BitWord::parse(std::string_view text, unsigned width) {
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'o' || text[1] == 'O'))
    return from_octal(text.substr(2), width);
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X'))
    return from_hex(text.substr(2), width);
  return from_hex(text, width);
}

BitWord BitWord::from_hex(std::string_view digits, unsigned width) {
  if (digits.empty()) throw std::invalid_argument("empty hex string");
  BitWord w(width);
  unsigned shift = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it, shift += 4) {
    const int d = hex_digit(*it);
    if (d < 0) throw std::invalid_argument(std::string("invalid hex digit '") + *it + "'");
    if (d == 0) continue;
    for (unsigned b = 0; b < 4; ++b) {
      if (!((d >> b) & 1)) continue;
      const unsigned pos = shift + b;
      if (pos >= width)
        throw std::invalid_argument("hex value exceeds width " + std::to_string(width));
      w.limbs_[pos / kLimbBits] |= std::uint64_t{1} << (pos % kLimbBits);
    }
  }
  return w;
}

BitWord BitWord::from_octal(std::string_view digits, unsigned width) {
  if (digits.empty()) throw std::invalid_argument("empty octal string");
  BitWord w(width);
  unsigned shift = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it, shift += 3) {
    if (*it < '0' || *it > '7')
      throw std::invalid_argument(std::string("invalid octal digit '") + *it + "'");
    const int d = *it - '0';
    if (d == 0) continue;
    for (unsigned b = 0; b < 3; ++b) {
      if (!((d >> b) & 1)) continue;
      const unsigned pos = shift + b;
      if (pos >= width)
        throw std::invalid_argument("octal value exceeds width " + std::to_string(width));
      w.limbs_[pos / kLimbBits] |= std::uint64_t{1} << (pos % kLimbBits);
    }
  }
  return w;
}

bool BitWord::is_zero() const {
  return std::all_of(limbs_.begin(), limbs_.end(), [](std::uint64_t l) { return l == 0; });
}

int BitWord::bit(unsigned position) const {
  if (position >= width_) throw std::invalid_argument("bit position out of range");
  return static_cast<int>((limbs_[position / kLimbBits] >> (position % kLimbBits)) & 1);
}

std::string BitWord::to_hex() const {
  std::string out;
  out.reserve(limbs_.size() * 16);
  static const char* kDigits = "0123456789abcdef";
  for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it)
    for (int nib = 15; nib >= 0; --nib) out.push_back(kDigits[(*it >> (nib * 4)) & 0xF]);
  const auto first = out.find_first_not_of('0');
  if (first == std::string::npos) return "0";
  return out.substr(first);
}

std::uint64_t BitWord::to_u64() const {
  for (std::size_t i = 1; i < limbs_.size(); ++i)
    if (limbs_[i] != 0) throw std::overflow_error("BitWord value does not fit in 64 bits");
  return limbs_[0];
}

std::uint64_t BitWord::extract_bits(unsigned lsb, unsigned count) const {
  if (count == 0 || count > 64) throw std::invalid_argument("extract_bits count out of range");
  if (lsb >= width_ || count > width_ - lsb)
    throw std::invalid_argument("extract_bits range exceeds width");
  std::uint64_t value = 0;
  for (unsigned b = 0; b < count; ++b)
    value |= static_cast<std::uint64_t>(bit(lsb + b)) << b;
  return value;
}

BitWord BitWord::add(const BitWord& other) const {
  require_same_width(other);
  BitWord out(width_);
  unsigned __int128 carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    const unsigned __int128 s = carry + limbs_[i] + other.limbs_[i];
    out.limbs_[i] = static_cast<std::uint64_t>(s);
    carry = s >> kLimbBits;
  }
  out.mask_top();
  return out;
}

BitWord BitWord::sub(const BitWord& other) const {
  require_same_width(other);
  BitWord out(width_);
  std::uint64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    const std::uint64_t rhs = other.limbs_[i];
    const std::uint64_t d1 = limbs_[i] - rhs;
    const std::uint64_t d2 = d1 - borrow;
    borrow = (limbs_[i] < rhs) || (d1 < borrow) ? 1 : 0;
    out.limbs_[i] = d2;
  }
  out.mask_top();
  return out;
}

BitWord BitWord::band(const BitWord& other) const {
  require_same_width(other);
  BitWord out(width_);
  for (std::size_t i = 0; i < limbs_.size(); ++i) out.limbs_[i] = limbs_[i] & other.limbs_[i];
  return out;
}

BitWord BitWord::bor(const BitWord& other) const {
  require_same_width(other);
  BitWord out(width_);
  for (std::size_t i = 0; i < limbs_.size(); ++i) out.limbs_[i] = limbs_[i] | other.limbs_[i];
  return out;
}

BitWord BitWord::bxor(const BitWord& other) const {
  require_same_width(other);
  BitWord out(width_);
  for (std::size_t i = 0; i < limbs_.size(); ++i) out.limbs_[i] = limbs_[i] ^ other.limbs_[i];
  return out;
}

BitWord BitWord::bnot() const {
  BitWord out(width_);
  for (std::size_t i = 0; i < limbs_.size(); ++i) out.limbs_[i] = ~limbs_[i];
  out.mask_top();
  return out;
}

BitWord BitWord::shl(unsigned k) const {
  if (k >= width_) throw std::out_of_range("shift amount out of range");
  BitWord out(width_);
  const unsigned limb_shift = k / kLimbBits;
  const unsigned bit_shift = k % kLimbBits;
  for (std::size_t i = limbs_.size(); i-- > limb_shift;) {
    std::uint64_t v = limbs_[i - limb_shift] << bit_shift;
    if (bit_shift != 0 && i > limb_shift)
      v |= limbs_[i - limb_shift - 1] >> (kLimbBits - bit_shift);
    out.limbs_[i] = v;
  }
  out.mask_top();
  return out;
}

BitWord BitWord::shr(unsigned k) const {
  if (k >= width_) throw std::out_of_range("shift amount out of range");
  BitWord out(width_);
  const unsigned limb_shift = k / kLimbBits;
  const unsigned bit_shift = k % kLimbBits;
  for (std::size_t i = 0; i + limb_shift < limbs_.size(); ++i) {
    std::uint64_t v = limbs_[i + limb_shift] >> bit_shift;
    if (bit_shift != 0 && i + limb_shift + 1 < limbs_.size())
      v |= limbs_[i + limb_shift + 1] << (kLimbBits - bit_shift);
    out.limbs_[i] = v;
  }
  return out;
}

std::uint64_t BitWord::rem(std::uint64_t modulus) const {
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
  unsigned __int128 r = 0;
  for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it)
    r = ((r << kLimbBits) | *it) % modulus;
  return static_cast<std::uint64_t>(r);
}

}  // namespace swarlab
