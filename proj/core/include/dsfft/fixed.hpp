// Q1.15 two's-complement fixed-point arithmetic.
//
// Every datapath in the library is defined in terms of the operations in this
// header: a 16-bit word interpreted as raw * 2^-15, with explicit rounding and
// overflow policies on each operation that can lose information.

#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace dsfft {

inline constexpr int kFracBits = 15;
inline constexpr std::int32_t kRawMax = 32767;
inline constexpr std::int32_t kRawMin = -32768;

enum class RoundingMode { Truncate, NearestHalfUp };
enum class OverflowMode { Saturate, Wrap };

/// A 16-bit Q1.15 word. Value = raw * 2^-15, range [-1, 1 - 2^-15].
class Fixed16 {
 public:
  constexpr Fixed16() = default;

  static constexpr Fixed16 from_raw(std::int16_t raw) { return Fixed16(raw); }
  // Reinterprets the low 16 bits of a bit pattern such as 0x8000.
  static constexpr Fixed16 from_bits(std::uint16_t bits) {
    return Fixed16(static_cast<std::int16_t>(bits));
  }

  constexpr std::int16_t raw() const { return raw_; }
  constexpr std::uint16_t bits() const { return static_cast<std::uint16_t>(raw_); }

  friend constexpr bool operator==(Fixed16, Fixed16) = default;
  friend constexpr auto operator<=>(Fixed16, Fixed16) = default;

 private:
  constexpr explicit Fixed16(std::int16_t raw) : raw_(raw) {}
  std::int16_t raw_ = 0;
};

struct ComplexFixed {
  Fixed16 re;
  Fixed16 im;

  friend constexpr bool operator==(const ComplexFixed&, const ComplexFixed&) = default;
};

/// Quantizes a finite real to Q1.15 with round-to-nearest; out-of-range
/// values saturate.
Fixed16 from_real(double v);
double to_real(Fixed16 x);

/// Clamps a wide integer to the 16-bit raw range.
constexpr std::int16_t saturate16(std::int64_t v) {
  if (v > kRawMax) return static_cast<std::int16_t>(kRawMax);
  if (v < kRawMin) return static_cast<std::int16_t>(kRawMin);
  return static_cast<std::int16_t>(v);
}

/// Keeps the low 16 bits, two's-complement.
constexpr std::int16_t wrap16(std::int64_t v) {
  return static_cast<std::int16_t>(static_cast<std::uint16_t>(v & 0xFFFF));
}

constexpr std::int16_t narrow16(std::int64_t v, OverflowMode mode) {
  return mode == OverflowMode::Saturate ? saturate16(v) : wrap16(v);
}

/// Arithmetic right shift by `shift` bits under the rounding mode. NearestHalfUp
/// adds half an output LSB first, so ties go towards +infinity.
constexpr std::int64_t rescale(std::int64_t v, int shift, RoundingMode rnd) {
  if (shift <= 0) return v;
  if (rnd == RoundingMode::NearestHalfUp) v += std::int64_t{1} << (shift - 1);
  return v >> shift;
}

/// Rescales a Q2.30 product to Q1.15 and saturates. The only product that can
/// overflow is (-1) * (-1).
constexpr Fixed16 rescale_product(std::int64_t product, RoundingMode rnd) {
  return Fixed16::from_raw(saturate16(rescale(product, kFracBits, rnd)));
}

constexpr Fixed16 q15_add(Fixed16 a, Fixed16 b, OverflowMode mode) {
  return Fixed16::from_raw(narrow16(std::int64_t{a.raw()} + b.raw(), mode));
}

constexpr Fixed16 q15_sub(Fixed16 a, Fixed16 b, OverflowMode mode) {
  return Fixed16::from_raw(narrow16(std::int64_t{a.raw()} - b.raw(), mode));
}

constexpr Fixed16 q15_mul(Fixed16 a, Fixed16 b, RoundingMode rnd) {
  const std::int32_t product = std::int32_t{a.raw()} * std::int32_t{b.raw()};
  return rescale_product(product, rnd);
}

constexpr Fixed16 scale_half(Fixed16 x, RoundingMode rnd) {
  return Fixed16::from_raw(saturate16(rescale(x.raw(), 1, rnd)));
}

/// Four uppercase hex digits of the raw word, e.g. "5A82".
std::string to_hex(Fixed16 x);

const char* to_string(RoundingMode mode);
const char* to_string(OverflowMode mode);

}  // namespace dsfft
