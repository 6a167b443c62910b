// Iterative in-place radix-2 decimation-in-time FFT over Q1.15 samples.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dsfft/butterfly.hpp"
#include "dsfft/fixed.hpp"
#include "dsfft/twiddle.hpp"

namespace dsfft {

enum class Backend { Conventional, DigitSlicing };

const char* to_string(Backend b);

/// Time-domain samples; length is a power of two >= 2.
class Signal {
 public:
  explicit Signal(std::vector<ComplexFixed> samples);

  std::size_t size() const { return samples_.size(); }
  std::span<const ComplexFixed> samples() const { return samples_; }
  const ComplexFixed& operator[](std::size_t i) const { return samples_[i]; }

 private:
  std::vector<ComplexFixed> samples_;
};

struct Spectrum {
  std::vector<ComplexFixed> bins;
  // Total right shifts applied: bins approximate DFT(x) / 2^scale_log2.
  int scale_log2 = 0;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Upper bound on the block-table storage a plan may allocate.
inline constexpr std::size_t kMaxPlanTableBytes = std::size_t{64} << 20;

class FftPlan {
 public:
  /// Builds the twiddle ROM and, for DigitSlicing, every block table up
  /// front. Throws std::invalid_argument for a bad size or slice params.
  FftPlan(std::size_t n, Backend backend, DatapathConfig cfg = {});

  std::size_t n() const { return rom_.n(); }
  int stages() const { return stages_; }
  Backend backend() const { return backend_; }
  const DatapathConfig& config() const { return cfg_; }
  const TwiddleRom& rom() const { return rom_; }
  const std::vector<BlockProductTable>& tables() const { return tables_; }

 private:
  TwiddleRom rom_;
  int stages_;
  Backend backend_;
  DatapathConfig cfg_;
  std::vector<BlockProductTable> tables_;
};

FftPlan plan(std::size_t n, Backend backend, DatapathConfig cfg = {});

std::size_t reverse_bits(std::size_t i, int bits);

/// Moves sample i to reverse_bits(i, log2 N). Self-inverse.
Signal bit_reverse_permute(const Signal& sig);
void bit_reverse_permute_in_place(std::span<ComplexFixed> data);

struct FftOptions {
  // Butterflies within a stage are split across this many threads; results
  // are bit-identical for any value.
  unsigned workers = 1;
};

/// Throws std::invalid_argument when sig.size() != plan.n().
Spectrum fft(const FftPlan& plan, const Signal& sig, OpCounter* counter = nullptr,
             FftOptions options = {});

/// Conjugate-in, conjugate-out inverse built on the forward transform.
Spectrum inverse_fft(const FftPlan& plan, const Spectrum& spectrum, OpCounter* counter = nullptr);

struct BackendComparison {
  Spectrum conventional;
  Spectrum digit_slicing;
  OpCounts conventional_counts;
  OpCounts digit_slicing_counts;

  bool bit_identical() const { return conventional == digit_slicing; }
};

BackendComparison fft_both_backends(std::size_t n, const Signal& sig, const DatapathConfig& cfg = {});

}  // namespace dsfft
