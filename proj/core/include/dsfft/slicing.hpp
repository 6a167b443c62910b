// Digit slicing: splitting a fixed-point word into b blocks of p bits.
//
// Even scheme (word length b*p, 16 bits here): block k carries weight 2^(p*k),
// k = 0 is least significant, and the top block is signed because its MSB is
// the word's sign bit. Summing X_k * 2^(p*k) reproduces the raw integer.
//
// Odd scheme (word length (b-1)*p + 1, 17 bits here): a separate sign block
// that is 0 or -1, followed by b-1 unsigned magnitude blocks, most
// significant first. Value = sign + sum_{k=1}^{b-1} X_k * 2^(-p*k).

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "dsfft/fixed.hpp"

namespace dsfft {

struct SliceParams {
  int blocks = 4;  // b
  int width = 4;   // p

  friend constexpr bool operator==(const SliceParams&, const SliceParams&) = default;
};

inline constexpr SliceParams kDefaultSlicing{4, 4};
inline constexpr int kMaxBlocks = 17;

/// Throws std::invalid_argument unless blocks * width == 16.
void validate_even(SliceParams params);
/// Throws std::invalid_argument unless (blocks - 1) * width + 1 == 17.
void validate_odd(SliceParams params);

class SlicedWord {
 public:
  SlicedWord() = default;
  /// Builds from explicit blocks (least significant first), checking every
  /// block range. Throws std::invalid_argument on violation.
  SlicedWord(SliceParams params, std::span<const std::int32_t> blocks);

  SliceParams params() const { return params_; }
  std::span<const std::int32_t> blocks() const {
    return {blocks_.data(), static_cast<std::size_t>(params_.blocks)};
  }
  std::int32_t block(int k) const { return blocks_[static_cast<std::size_t>(k)]; }

  friend bool operator==(const SlicedWord& a, const SlicedWord& b) {
    return a.params_ == b.params_ && a.blocks_ == b.blocks_;
  }

 private:
  friend SlicedWord slice(Fixed16 x, SliceParams params);
  SliceParams params_{};
  std::array<std::int32_t, kMaxBlocks> blocks_{};
};

/// A 17-bit two's-complement word; value = raw * 2^-16.
struct Word17 {
  static constexpr std::int32_t kMin = -65536;
  static constexpr std::int32_t kMax = 65535;
  std::int32_t raw = 0;

  friend constexpr bool operator==(Word17, Word17) = default;
};

class SlicedWordOdd {
 public:
  SlicedWordOdd() = default;
  /// `magnitude` holds X_1 .. X_{b-1}, most significant first.
  SlicedWordOdd(SliceParams params, std::int32_t sign_block,
                std::span<const std::int32_t> magnitude);

  SliceParams params() const { return params_; }
  std::int32_t sign_block() const { return sign_; }
  std::span<const std::int32_t> magnitude() const {
    return {blocks_.data(), static_cast<std::size_t>(params_.blocks - 1)};
  }

  friend bool operator==(const SlicedWordOdd& a, const SlicedWordOdd& b) {
    return a.params_ == b.params_ && a.sign_ == b.sign_ && a.blocks_ == b.blocks_;
  }

 private:
  friend SlicedWordOdd slice_odd(Word17 x, SliceParams params);
  SliceParams params_{};
  std::int32_t sign_ = 0;
  std::array<std::int32_t, kMaxBlocks> blocks_{};
};

struct SlicedComplex {
  SlicedWord re;
  SlicedWord im;
};

SlicedWord slice(Fixed16 x, SliceParams params = kDefaultSlicing);
Fixed16 reassemble(const SlicedWord& s);

/// sum_k 2^(p*k) * X_k as an integer; equals x.raw() for a valid slicing.
std::int64_t weighted_sum(const SlicedWord& s);

SlicedWordOdd slice_odd(Word17 x, SliceParams params = SliceParams{5, 4});
Word17 reassemble_odd(const SlicedWordOdd& s);
double odd_value(const SlicedWordOdd& s);

SlicedComplex slice_complex(ComplexFixed f, SliceParams params = kDefaultSlicing);
ComplexFixed reassemble_complex(const SlicedComplex& s);

/// "X3|X2|X1|X0": each block's bit pattern in hex, most significant first.
std::string to_string(const SlicedWord& s);

}  // namespace dsfft
