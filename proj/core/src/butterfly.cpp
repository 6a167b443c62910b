#include "dsfft/butterfly.hpp"

#include <stdexcept>

namespace dsfft {

const char* to_string(Scaling s) { return s == Scaling::HalfPerStage ? "half" : "none"; }

namespace {

constexpr std::uint64_t kScalingShifts = 4;
constexpr std::uint64_t kCombineAdds = 6;  // 2 in the complex product, 4 in add/sub

std::int16_t halve_sum(std::int32_t wide, RoundingMode rnd) {
  // |a +- t| < 2^16, so the halved value always fits 16 bits.
  return saturate16(rescale(wide, 1, rnd));
}

}  // namespace

OpCounts conventional_butterfly_cost(const DatapathConfig& cfg) {
  OpCounts c;
  c.real_multiplies = 4;
  c.real_adds = kCombineAdds;
  c.shifts = cfg.scaling == Scaling::HalfPerStage ? kScalingShifts : 0;
  return c;
}

OpCounts digit_slicing_butterfly_cost(const DatapathConfig& cfg) {
  const auto blocks = static_cast<std::uint64_t>(cfg.slice_params.blocks);
  OpCounts c;
  c.table_lookups = 4 * blocks;
  c.shifts = 4 * (blocks - 1) + (cfg.scaling == Scaling::HalfPerStage ? kScalingShifts : 0);
  c.real_adds = 4 * (blocks - 1) + kCombineAdds;
  return c;
}

std::int64_t sliced_product(const SlicedWord& x, const ComponentTable& table) {
  const int width = x.params().width;
  const int top = x.params().blocks - 1;
  std::int64_t acc = std::int64_t{table.lookup_top(x.block(top))} * (std::int64_t{1} << (width * top));
  for (int k = top - 1; k >= 0; --k) {
    acc += std::int64_t{table.lookup(x.block(k))} * (std::int64_t{1} << (width * k));
  }
  return acc;
}

Fixed16 digit_slicing_real_mul(Fixed16 x, const ComponentTable& table, SliceParams params,
                               RoundingMode rnd) {
  return rescale_product(sliced_product(slice(x, params), table), rnd);
}

ComplexFixed complex_mul_conventional(ComplexFixed b, const Twiddle& w, const DatapathConfig& cfg) {
  const Fixed16 br_wr = q15_mul(b.re, w.wr, cfg.rounding);
  const Fixed16 bi_wi = q15_mul(b.im, w.wi, cfg.rounding);
  const Fixed16 bi_wr = q15_mul(b.im, w.wr, cfg.rounding);
  const Fixed16 br_wi = q15_mul(b.re, w.wi, cfg.rounding);
  return {q15_add(br_wr, bi_wi, cfg.overflow), q15_sub(bi_wr, br_wi, cfg.overflow)};
}

ComplexFixed complex_mul_digit_slicing(ComplexFixed b, const BlockProductTable& tables,
                                       const DatapathConfig& cfg) {
  if (!(cfg.slice_params == tables.params)) {
    throw std::invalid_argument("digit slicing: datapath slice params do not match tables");
  }
  const SlicedComplex s = slice_complex(b, cfg.slice_params);
  const Fixed16 br_wr = rescale_product(sliced_product(s.re, tables.wr), cfg.rounding);
  const Fixed16 bi_wi = rescale_product(sliced_product(s.im, tables.wi), cfg.rounding);
  const Fixed16 bi_wr = rescale_product(sliced_product(s.im, tables.wr), cfg.rounding);
  const Fixed16 br_wi = rescale_product(sliced_product(s.re, tables.wi), cfg.rounding);
  return {q15_add(br_wr, bi_wi, cfg.overflow), q15_sub(bi_wr, br_wi, cfg.overflow)};
}

ButterflyOutput combine(ComplexFixed a, ComplexFixed t, const DatapathConfig& cfg) {
  if (cfg.scaling == Scaling::None) {
    return {{q15_add(a.re, t.re, cfg.overflow), q15_add(a.im, t.im, cfg.overflow)},
            {q15_sub(a.re, t.re, cfg.overflow), q15_sub(a.im, t.im, cfg.overflow)}};
  }
  const std::int32_t ar = a.re.raw(), ai = a.im.raw(), tr = t.re.raw(), ti = t.im.raw();
  return {{Fixed16::from_raw(halve_sum(ar + tr, cfg.rounding)),
           Fixed16::from_raw(halve_sum(ai + ti, cfg.rounding))},
          {Fixed16::from_raw(halve_sum(ar - tr, cfg.rounding)),
           Fixed16::from_raw(halve_sum(ai - ti, cfg.rounding))}};
}

ButterflyOutput butterfly_conventional(const ButterflyInput& in, const DatapathConfig& cfg,
                                       OpCounter* counter) {
  if (counter) counter->add(conventional_butterfly_cost(cfg));
  return combine(in.a, complex_mul_conventional(in.b_in, in.w, cfg), cfg);
}

ButterflyOutput butterfly_digit_slicing(const ButterflyInput& in, const BlockProductTable& tables,
                                        const DatapathConfig& cfg, OpCounter* counter) {
  const ComplexFixed t = complex_mul_digit_slicing(in.b_in, tables, cfg);
  if (counter) counter->add(digit_slicing_butterfly_cost(cfg));
  return combine(in.a, t, cfg);
}

}  // namespace dsfft
