#include "dsfft/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dsfft::oracle {
namespace {

RealSpectrum direct_sum(std::span<const std::complex<double>> x, double sign) {
  const std::size_t n = x.size();
  RealSpectrum out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      // Reduce k*j mod N first so the angle stays small and exact.
      const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>((k * j) % n) /
                           static_cast<double>(n);
      acc += x[j] * std::polar(1.0, angle);
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace

RealSpectrum dft_reference(std::span<const std::complex<double>> x) { return direct_sum(x, -1.0); }

RealSpectrum idft_reference(std::span<const std::complex<double>> x) {
  RealSpectrum out = direct_sum(x, 1.0);
  for (auto& v : out) v /= static_cast<double>(x.size());
  return out;
}

std::vector<std::complex<double>> to_complex(std::span<const ComplexFixed> x) {
  std::vector<std::complex<double>> out;
  out.reserve(x.size());
  for (const ComplexFixed& c : x) out.emplace_back(to_real(c.re), to_real(c.im));
  return out;
}

ErrorReport compare(std::span<const std::complex<double>> measured,
                    std::span<const std::complex<double>> reference) {
  if (measured.size() != reference.size()) {
    throw std::invalid_argument("compare: length mismatch");
  }
  ErrorReport r;
  double err_energy = 0.0;
  double ref_energy = 0.0;
  for (std::size_t k = 0; k < measured.size(); ++k) {
    const std::complex<double> e = measured[k] - reference[k];
    const double mag = std::abs(e);
    if (mag > r.max_abs_err) {
      r.max_abs_err = mag;
      r.worst_bin = k;
    }
    r.max_component_err = std::max({r.max_component_err, std::abs(e.real()), std::abs(e.imag())});
    err_energy += std::norm(e);
    ref_energy += std::norm(reference[k]);
  }
  if (!measured.empty()) r.rms_err = std::sqrt(err_energy / static_cast<double>(measured.size()));
  if (ref_energy > 0.0 && err_energy > 0.0) {
    r.sqnr_db = 10.0 * std::log10(ref_energy / err_energy);
  }
  return r;
}

ErrorReport compare(const Spectrum& spectrum, const RealSpectrum& reference) {
  auto measured = to_complex(spectrum.bins);
  for (auto& v : measured) v = std::ldexp(1.0, spectrum.scale_log2) * v;
  return compare(measured, reference);
}

ErrorReport compare_normalized(const Spectrum& spectrum, const RealSpectrum& reference) {
  RealSpectrum scaled(reference);
  for (auto& v : scaled) v = std::ldexp(1.0, -spectrum.scale_log2) * v;
  return compare(to_complex(spectrum.bins), scaled);
}

std::int16_t mul_reference(std::int16_t a_raw, std::int16_t b_raw, RoundingMode rnd) {
  const double product = static_cast<double>(a_raw) * static_cast<double>(b_raw);
  const double scaled = product / 32768.0;
  const double rounded =
      rnd == RoundingMode::Truncate ? std::floor(scaled) : std::floor(scaled + 0.5);
  return static_cast<std::int16_t>(std::clamp(rounded, -32768.0, 32767.0));
}

}  // namespace dsfft::oracle
