#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dsfft/butterfly.hpp"
#include "dsfft/fft.hpp"

namespace {

using namespace dsfft;

std::vector<ComplexFixed> make_signal(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> d(-0.9, 0.9);
  std::vector<ComplexFixed> x(n);
  for (auto& c : x) c = {from_real(d(rng)), from_real(d(rng))};
  return x;
}

void BM_ComplexMulConventional(benchmark::State& state) {
  const auto x = make_signal(1024);
  const Twiddle w{Fixed16::from_bits(0x5A82), Fixed16::from_bits(0x5A82)};
  const DatapathConfig cfg;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(complex_mul_conventional(x[i++ & 1023], w, cfg));
  }
}
BENCHMARK(BM_ComplexMulConventional);

void BM_ComplexMulDigitSlicing(benchmark::State& state) {
  const auto x = make_signal(1024);
  const DatapathConfig cfg;
  const BlockProductTable tables =
      make_block_tables({Fixed16::from_bits(0x5A82), Fixed16::from_bits(0x5A82)}, cfg.slice_params);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(complex_mul_digit_slicing(x[i++ & 1023], tables, cfg));
  }
}
BENCHMARK(BM_ComplexMulDigitSlicing);

template <Backend kBackend>
void BM_Fft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FftPlan p(n, kBackend);
  const Signal sig(make_signal(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fft(p, sig));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Fft<Backend::Conventional>)->RangeMultiplier(4)->Range(16, 4096)->Complexity();
BENCHMARK(BM_Fft<Backend::DigitSlicing>)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_PlanDigitSlicing(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(FftPlan(n, Backend::DigitSlicing));
}
BENCHMARK(BM_PlanDigitSlicing)->Arg(256)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
