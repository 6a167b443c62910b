#include "dsfft/fixed.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dsfft {

Fixed16 from_real(double v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument("from_real: value is not finite");
  }
  // ldexp is exact; std::nearbyint under the default rounding mode would give
  // banker's ties, so round half away from zero explicitly.
  const double scaled = std::round(std::ldexp(v, kFracBits));
  if (scaled >= kRawMax) return Fixed16::from_raw(static_cast<std::int16_t>(kRawMax));
  if (scaled <= kRawMin) return Fixed16::from_raw(static_cast<std::int16_t>(kRawMin));
  return Fixed16::from_raw(static_cast<std::int16_t>(scaled));
}

double to_real(Fixed16 x) { return std::ldexp(static_cast<double>(x.raw()), -kFracBits); }

std::string to_hex(Fixed16 x) {
  char buf[5];
  std::snprintf(buf, sizeof buf, "%04X", static_cast<unsigned>(x.bits()));
  return buf;
}

const char* to_string(RoundingMode mode) {
  return mode == RoundingMode::Truncate ? "trunc" : "nearest";
}

const char* to_string(OverflowMode mode) {
  return mode == OverflowMode::Saturate ? "saturate" : "wrap";
}

}  // namespace dsfft
