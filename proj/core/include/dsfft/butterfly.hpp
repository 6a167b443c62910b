// Radix-2 DIT butterfly, X = A + B*W and Y = A - B*W, in two backends:
//
//  * conventional: four real multiplies and two real adds for B*W;
//  * digit slicing: B is sliced into b blocks of p bits and every real product
//    is assembled from table lookups T[X_k] shifted by p*k and summed, with no
//    multiplier in the datapath.
//
// The digit-slicing accumulator keeps the full integer product and rounds it
// exactly once, at the same bit position as q15_mul, so both backends agree
// bit for bit on every input.

#pragma once

#include <cstdint>

#include "dsfft/fixed.hpp"
#include "dsfft/slicing.hpp"
#include "dsfft/twiddle.hpp"

namespace dsfft {

enum class Scaling { None, HalfPerStage };

struct DatapathConfig {
  RoundingMode rounding = RoundingMode::NearestHalfUp;
  OverflowMode overflow = OverflowMode::Saturate;
  Scaling scaling = Scaling::HalfPerStage;
  SliceParams slice_params = kDefaultSlicing;

  friend constexpr bool operator==(const DatapathConfig&, const DatapathConfig&) = default;
};

const char* to_string(Scaling s);

struct OpCounts {
  std::uint64_t real_multiplies = 0;
  std::uint64_t real_adds = 0;
  std::uint64_t table_lookups = 0;
  std::uint64_t shifts = 0;

  OpCounts& operator+=(const OpCounts& o) {
    real_multiplies += o.real_multiplies;
    real_adds += o.real_adds;
    table_lookups += o.table_lookups;
    shifts += o.shifts;
    return *this;
  }
  friend constexpr bool operator==(const OpCounts&, const OpCounts&) = default;
};

/// Accumulates operation counts across calls. Not synchronized: give each
/// worker its own counter and merge.
class OpCounter {
 public:
  void reset() { counts_ = {}; }
  OpCounts read() const { return counts_; }
  void add(const OpCounts& c) { counts_ += c; }
  void merge(const OpCounter& other) { counts_ += other.counts_; }

 private:
  OpCounts counts_;
};

struct ButterflyInput {
  ComplexFixed a;
  ComplexFixed b_in;
  Twiddle w;
};

struct ButterflyOutput {
  ComplexFixed x;
  ComplexFixed y;

  friend constexpr bool operator==(const ButterflyOutput&, const ButterflyOutput&) = default;
};

/// Per-call operation cost of each backend.
OpCounts conventional_butterfly_cost(const DatapathConfig& cfg);
OpCounts digit_slicing_butterfly_cost(const DatapathConfig& cfg);

/// Full-precision sum_k 2^(p*k) * T[X_k] for one sliced multiplicand against
/// one table; equals x.raw() * coefficient exactly.
std::int64_t sliced_product(const SlicedWord& x, const ComponentTable& table);

/// One real product x * w through the table path, rounded like q15_mul.
Fixed16 digit_slicing_real_mul(Fixed16 x, const ComponentTable& table, SliceParams params,
                               RoundingMode rnd);

ComplexFixed complex_mul_conventional(ComplexFixed b_in, const Twiddle& w,
                                      const DatapathConfig& cfg);

/// Throws std::invalid_argument if cfg.slice_params differs from tables.params.
ComplexFixed complex_mul_digit_slicing(ComplexFixed b_in, const BlockProductTable& tables,
                                       const DatapathConfig& cfg);

ButterflyOutput butterfly_conventional(const ButterflyInput& in, const DatapathConfig& cfg,
                                       OpCounter* counter = nullptr);

/// `in.w` is ignored; the twiddle is the one the tables were built from.
ButterflyOutput butterfly_digit_slicing(const ButterflyInput& in, const BlockProductTable& tables,
                                        const DatapathConfig& cfg, OpCounter* counter = nullptr);

/// The add/subtract half shared by both backends: x = a + t, y = a - t with
/// overflow policy, or at 17-bit headroom followed by a rounded halving.
ButterflyOutput combine(ComplexFixed a, ComplexFixed t, const DatapathConfig& cfg);

}  // namespace dsfft
