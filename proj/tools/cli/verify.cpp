#include <cmath>
#include <iostream>
#include <random>
#include <sstream>

#include "cli/commands.hpp"
#include "dsfft/slicing.hpp"

namespace dsfft::cli {
namespace {

constexpr std::uint16_t kEquivalenceTwiddles[] = {0x7FFF, 0x5A82, 0x4000, 0x2000,
                                                  0x0000, 0x8001, 0xA57E, 0xE000};

SuiteResult finish(std::string name, std::uint64_t cases, std::uint64_t mismatches,
                   std::string detail = {}) {
  return {std::move(name), mismatches == 0, cases, mismatches, std::move(detail)};
}

SuiteResult even_roundtrip(VerifyLevel level) {
  const std::uint32_t step = level == VerifyLevel::Full ? 1 : 7;
  std::uint64_t cases = 0, bad = 0;
  for (std::uint32_t bits = 0; bits <= 0xFFFF; bits += step) {
    const Fixed16 x = Fixed16::from_bits(static_cast<std::uint16_t>(bits));
    const SlicedWord s = slice(x, kDefaultSlicing);
    ++cases;
    if (reassemble(s) != x || weighted_sum(s) != x.raw()) ++bad;
  }
  return finish("slicing-even-roundtrip", cases, bad);
}

SuiteResult odd_roundtrip(VerifyLevel level) {
  const std::int32_t step = level == VerifyLevel::Full ? 1 : 7;
  const SliceParams params{5, 4};
  std::uint64_t cases = 0, bad = 0;
  for (std::int32_t raw = Word17::kMin; raw <= Word17::kMax; raw += step) {
    ++cases;
    if (reassemble_odd(slice_odd(Word17{raw}, params)) != Word17{raw}) ++bad;
  }
  return finish("slicing-odd-roundtrip", cases, bad);
}

SuiteResult multiplier_equivalence(const VerifyOptions& opts) {
  const std::uint32_t step = opts.level == VerifyLevel::Full ? 1 : 13;
  std::uint64_t cases = 0, bad = 0;
  for (RoundingMode rnd : {RoundingMode::NearestHalfUp, RoundingMode::Truncate}) {
    const RoundingMode slice_rnd = opts.slicing_rounding_fault.value_or(rnd);
    for (std::uint16_t w_bits : kEquivalenceTwiddles) {
      const Fixed16 w = Fixed16::from_bits(w_bits);
      const ComponentTable table(w, kDefaultSlicing);
      for (std::uint32_t bits = 0; bits <= 0xFFFF; bits += step) {
        const Fixed16 x = Fixed16::from_bits(static_cast<std::uint16_t>(bits));
        ++cases;
        if (digit_slicing_real_mul(x, table, kDefaultSlicing, slice_rnd) != q15_mul(x, w, rnd)) ++bad;
      }
    }
  }
  return finish("multiplier-equivalence", cases, bad);
}

SuiteResult butterfly_equivalence(const VerifyOptions& opts) {
  const std::uint64_t total = opts.level == VerifyLevel::Full ? 1'000'000 : 20'000;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> word(-32768, 32767);
  auto fx = [&] { return Fixed16::from_raw(static_cast<std::int16_t>(word(rng))); };

  const DatapathConfig configs[] = {
      {RoundingMode::NearestHalfUp, OverflowMode::Saturate, Scaling::HalfPerStage, kDefaultSlicing},
      {RoundingMode::NearestHalfUp, OverflowMode::Saturate, Scaling::None, kDefaultSlicing},
      {RoundingMode::Truncate, OverflowMode::Saturate, Scaling::HalfPerStage, kDefaultSlicing},
      {RoundingMode::Truncate, OverflowMode::Saturate, Scaling::None, kDefaultSlicing},
  };
  std::uint64_t bad = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    const DatapathConfig& cfg = configs[i % 4];
    DatapathConfig slice_cfg = cfg;
    if (opts.slicing_rounding_fault) slice_cfg.rounding = *opts.slicing_rounding_fault;
    const ButterflyInput in{{fx(), fx()}, {fx(), fx()}, {fx(), fx()}};
    const BlockProductTable tables = make_block_tables(in.w, cfg.slice_params);
    if (butterfly_digit_slicing(in, tables, slice_cfg) != butterfly_conventional(in, cfg)) ++bad;
  }
  return finish("butterfly-equivalence", total, bad);
}

SuiteResult oracle_tolerance(const VerifyOptions& opts) {
  const int signals = opts.level == VerifyLevel::Full ? 100 : 4;
  std::mt19937_64 rng(opts.seed + 1);
  std::uniform_real_distribution<double> amp(-0.9, 0.9);
  std::uint64_t cases = 0, bad = 0;
  std::ostringstream detail;
  for (std::size_t n : {8u, 64u, 256u, 1024u}) {
    const FftPlan p(n, Backend::DigitSlicing);
    const double tol = std::log2(static_cast<double>(n)) * std::ldexp(1.0, -14);
    double worst = 0.0;
    double min_sqnr = INFINITY;
    for (int s = 0; s < signals; ++s) {
      std::vector<ComplexFixed> x(n);
      for (auto& c : x) c = {from_real(amp(rng)), from_real(amp(rng))};
      const Spectrum spec = fft(p, Signal(x));
      const auto ref = oracle::dft_reference(oracle::to_complex(x));
      const auto e = oracle::compare_normalized(spec, ref);
      ++cases;
      worst = std::max(worst, e.max_component_err);
      if (e.sqnr_db) min_sqnr = std::min(min_sqnr, *e.sqnr_db);
      if (e.max_component_err > tol) ++bad;
      if (n == 256 && e.sqnr_db && *e.sqnr_db < 60.0) ++bad;
    }
    detail << " N=" << n << ":max_err=" << worst / std::ldexp(1.0, -15) << "lsb";
    if (n == 256) detail << ",min_sqnr=" << min_sqnr << "dB";
  }
  return finish("oracle-tolerance", cases, bad, detail.str());
}

}  // namespace

std::vector<SuiteResult> run_verify(const VerifyOptions& opts) {
  return {
      even_roundtrip(opts.level),
      odd_roundtrip(opts.level),
      multiplier_equivalence(opts),
      butterfly_equivalence(opts),
      oracle_tolerance(opts),
  };
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out) {
  bool all = true;
  for (const SuiteResult& r : run_verify(opts)) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases
        << " mismatches=" << r.mismatches << r.detail << '\n';
    all = all && r.passed;
  }
  return all ? kOk : kVerifyFailed;
}

}  // namespace dsfft::cli
