#include "dsfft/slicing.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dsfft {
namespace {

constexpr int kEvenBits = 16;
constexpr int kOddBits = 17;

std::int32_t low_mask(int width) { return static_cast<std::int32_t>((1u << width) - 1u); }

void check_positive(SliceParams params) {
  if (params.blocks < 1 || params.width < 1 || params.blocks > kMaxBlocks) {
    throw std::invalid_argument("slice params: blocks and width must be positive");
  }
}

}  // namespace

void validate_even(SliceParams params) {
  check_positive(params);
  if (params.blocks * params.width != kEvenBits) {
    throw std::invalid_argument("slice params: blocks * width must equal 16");
  }
}

void validate_odd(SliceParams params) {
  check_positive(params);
  if (params.blocks < 2 || (params.blocks - 1) * params.width + 1 != kOddBits) {
    throw std::invalid_argument("slice params: (blocks - 1) * width + 1 must equal 17");
  }
}

SlicedWord::SlicedWord(SliceParams params, std::span<const std::int32_t> blocks) {
  validate_even(params);
  if (blocks.size() != static_cast<std::size_t>(params.blocks)) {
    throw std::invalid_argument("sliced word: block count does not match params");
  }
  const std::int32_t unsigned_max = low_mask(params.width);
  const std::int32_t top_min = -(std::int32_t{1} << (params.width - 1));
  const std::int32_t top_max = (std::int32_t{1} << (params.width - 1)) - 1;
  const int top = params.blocks - 1;
  for (int k = 0; k < params.blocks; ++k) {
    const std::int32_t v = blocks[static_cast<std::size_t>(k)];
    const bool ok = k == top ? (v >= top_min && v <= top_max) : (v >= 0 && v <= unsigned_max);
    if (!ok) {
      throw std::invalid_argument("sliced word: block " + std::to_string(k) + " out of range");
    }
    blocks_[static_cast<std::size_t>(k)] = v;
  }
  params_ = params;
}

SlicedWord slice(Fixed16 x, SliceParams params) {
  validate_even(params);
  SlicedWord s;
  s.params_ = params;
  const std::int32_t raw = x.raw();
  const std::int32_t mask = low_mask(params.width);
  const int top = params.blocks - 1;
  for (int k = 0; k < top; ++k) {
    s.blocks_[static_cast<std::size_t>(k)] = (raw >> (params.width * k)) & mask;
  }
  // Arithmetic shift leaves the top field sign-extended.
  s.blocks_[static_cast<std::size_t>(top)] = raw >> (params.width * top);
  return s;
}

std::int64_t weighted_sum(const SlicedWord& s) {
  const int width = s.params().width;
  std::int64_t acc = 0;
  for (int k = 0; k < s.params().blocks; ++k) {
    acc += std::int64_t{s.block(k)} * (std::int64_t{1} << (width * k));
  }
  return acc;
}

Fixed16 reassemble(const SlicedWord& s) {
  validate_even(s.params());
  return Fixed16::from_raw(static_cast<std::int16_t>(weighted_sum(s)));
}

SlicedWordOdd::SlicedWordOdd(SliceParams params, std::int32_t sign_block,
                             std::span<const std::int32_t> magnitude) {
  validate_odd(params);
  if (sign_block != 0 && sign_block != -1) {
    throw std::invalid_argument("sliced odd word: sign block must be 0 or -1");
  }
  if (magnitude.size() != static_cast<std::size_t>(params.blocks - 1)) {
    throw std::invalid_argument("sliced odd word: block count does not match params");
  }
  const std::int32_t mask = low_mask(params.width);
  for (std::size_t i = 0; i < magnitude.size(); ++i) {
    if (magnitude[i] < 0 || magnitude[i] > mask) {
      throw std::invalid_argument("sliced odd word: block " + std::to_string(i + 1) +
                                  " out of range");
    }
    blocks_[i] = magnitude[i];
  }
  params_ = params;
  sign_ = sign_block;
}

SlicedWordOdd slice_odd(Word17 x, SliceParams params) {
  validate_odd(params);
  if (x.raw < Word17::kMin || x.raw > Word17::kMax) {
    throw std::invalid_argument("slice_odd: word outside 17-bit range");
  }
  SlicedWordOdd s;
  s.params_ = params;
  s.sign_ = x.raw < 0 ? -1 : 0;
  const std::int32_t low = x.raw & 0xFFFF;
  const std::int32_t mask = low_mask(params.width);
  for (int k = 1; k < params.blocks; ++k) {
    s.blocks_[static_cast<std::size_t>(k - 1)] = (low >> (kOddBits - 1 - params.width * k)) & mask;
  }
  return s;
}

Word17 reassemble_odd(const SlicedWordOdd& s) {
  validate_odd(s.params());
  const int width = s.params().width;
  std::int32_t raw = s.sign_block() * (std::int32_t{1} << (kOddBits - 1));
  const auto mag = s.magnitude();
  for (std::size_t i = 0; i < mag.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    raw += mag[i] << (kOddBits - 1 - width * k);
  }
  return Word17{raw};
}

double odd_value(const SlicedWordOdd& s) {
  double v = s.sign_block();
  const auto mag = s.magnitude();
  for (std::size_t i = 0; i < mag.size(); ++i) {
    v += std::ldexp(static_cast<double>(mag[i]), -s.params().width * (static_cast<int>(i) + 1));
  }
  return v;
}

SlicedComplex slice_complex(ComplexFixed f, SliceParams params) {
  return {slice(f.re, params), slice(f.im, params)};
}

ComplexFixed reassemble_complex(const SlicedComplex& s) {
  if (!(s.re.params() == s.im.params())) {
    throw std::invalid_argument("sliced complex: components use different params");
  }
  return {reassemble(s.re), reassemble(s.im)};
}

std::string to_string(const SlicedWord& s) {
  const int width = s.params().width;
  const int digits = (width + 3) / 4;
  const auto mask = static_cast<unsigned>(low_mask(width));
  std::string out;
  for (int k = s.params().blocks - 1; k >= 0; --k) {
    const unsigned bits = static_cast<unsigned>(s.block(k)) & mask;
    for (int d = digits - 1; d >= 0; --d) out += "0123456789ABCDEF"[(bits >> (4 * d)) & 0xF];
    if (k > 0) out += '|';
  }
  return out;
}

}  // namespace dsfft
