// Floating-point and wide-integer references for checking the fixed-point
// datapath, plus error metrics.
//
// The DFT here is the direct O(N^2) sum, deliberately not an FFT, so its
// rounding behaviour shares nothing with the implementation under test.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dsfft/fft.hpp"
#include "dsfft/fixed.hpp"

namespace dsfft::oracle {

using RealSpectrum = std::vector<std::complex<double>>;

RealSpectrum dft_reference(std::span<const std::complex<double>> x);
/// Inverse of dft_reference, including the 1/N factor.
RealSpectrum idft_reference(std::span<const std::complex<double>> x);

std::vector<std::complex<double>> to_complex(std::span<const ComplexFixed> x);

struct ErrorReport {
  double max_abs_err = 0.0;        // largest Euclidean norm of a bin error
  double max_component_err = 0.0;  // largest |re| or |im| error over all bins
  double rms_err = 0.0;
  std::optional<double> sqnr_db;   // absent when the reference or error has zero energy
  std::size_t worst_bin = 0;
};

/// Compares `measured` against `reference` bin by bin. Throws
/// std::invalid_argument on a length mismatch.
ErrorReport compare(std::span<const std::complex<double>> measured,
                    std::span<const std::complex<double>> reference);

/// Rescales the fixed-point spectrum by 2^scale_log2 and compares it against
/// an unnormalized DFT.
ErrorReport compare(const Spectrum& spectrum, const RealSpectrum& reference);

/// Compares the spectrum as stored (DFT / 2^scale_log2) against the
/// reference divided by 2^scale_log2. This is the domain the fixed-point
/// words live in, so the errors are in units of the Q1.15 LSB.
ErrorReport compare_normalized(const Spectrum& spectrum, const RealSpectrum& reference);

/// Independent model of q15_mul: the exact product is formed in double
/// precision (exact for 16-bit operands) and rounded with floor().
std::int16_t mul_reference(std::int16_t a_raw, std::int16_t b_raw, RoundingMode rnd);

}  // namespace dsfft::oracle
