#include "dsfft/fft.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace dsfft {

const char* to_string(Backend b) { return b == Backend::Conventional ? "conv" : "slice"; }

Signal::Signal(std::vector<ComplexFixed> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 2 || !is_power_of_two(samples_.size())) {
    throw std::invalid_argument("signal length must be a power of two >= 2, got " +
                                std::to_string(samples_.size()));
  }
}

FftPlan::FftPlan(std::size_t n, Backend backend, DatapathConfig cfg)
    : rom_(n), stages_(log2_exact(n)), backend_(backend), cfg_(cfg) {
  validate_even(cfg_.slice_params);
  if (backend_ != Backend::DigitSlicing) return;
  if (block_table_bytes(cfg_.slice_params) * rom_.size() > kMaxPlanTableBytes) {
    throw std::invalid_argument("block tables for this size and block width exceed the plan limit");
  }
  tables_.reserve(rom_.size());
  for (const Twiddle& t : rom_.entries()) tables_.push_back(make_block_tables(t, cfg_.slice_params));
}

FftPlan plan(std::size_t n, Backend backend, DatapathConfig cfg) { return FftPlan(n, backend, cfg); }

std::size_t reverse_bits(std::size_t i, int bits) {
  std::size_t r = 0;
  for (int b = 0; b < bits; ++b) {
    r = (r << 1) | (i & 1);
    i >>= 1;
  }
  return r;
}

void bit_reverse_permute_in_place(std::span<ComplexFixed> data) {
  const int bits = log2_exact(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::size_t j = reverse_bits(i, bits);
    if (i < j) std::swap(data[i], data[j]);
  }
}

Signal bit_reverse_permute(const Signal& sig) {
  std::vector<ComplexFixed> out(sig.samples().begin(), sig.samples().end());
  bit_reverse_permute_in_place(out);
  return Signal(std::move(out));
}

namespace {

// Butterflies [first, last) of one stage. Butterfly i sits in group i / half
// at offset i % half.
void run_stage_range(const FftPlan& plan, std::span<ComplexFixed> data, std::size_t half,
                     std::size_t first, std::size_t last, OpCounter* counter) {
  const std::size_t stride = plan.n() / (2 * half);
  const DatapathConfig& cfg = plan.config();
  for (std::size_t i = first; i < last; ++i) {
    const std::size_t offset = i % half;
    const std::size_t top = (i / half) * 2 * half + offset;
    const std::size_t bottom = top + half;
    const std::size_t tw = offset * stride;
    const ButterflyInput in{data[top], data[bottom], plan.rom()[tw]};
    const ButterflyOutput out = plan.backend() == Backend::Conventional
                                    ? butterfly_conventional(in, cfg, counter)
                                    : butterfly_digit_slicing(in, plan.tables()[tw], cfg, counter);
    data[top] = out.x;
    data[bottom] = out.y;
  }
}

}  // namespace

Spectrum fft(const FftPlan& plan, const Signal& sig, OpCounter* counter, FftOptions options) {
  if (sig.size() != plan.n()) {
    throw std::invalid_argument("fft: signal length " + std::to_string(sig.size()) +
                                " does not match plan size " + std::to_string(plan.n()));
  }
  Spectrum out;
  out.bins.assign(sig.samples().begin(), sig.samples().end());
  bit_reverse_permute_in_place(out.bins);

  const std::size_t butterflies = plan.n() / 2;
  const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, butterflies);
  std::vector<OpCounter> worker_counts(workers);

  for (int s = 1; s <= plan.stages(); ++s) {
    const std::size_t half = std::size_t{1} << (s - 1);
    if (workers == 1) {
      run_stage_range(plan, out.bins, half, 0, butterflies, &worker_counts[0]);
      continue;
    }
    // Each butterfly touches a disjoint pair, so chunks never overlap; the
    // joins at scope exit are the stage barrier.
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (butterflies + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t first = w * chunk;
      const std::size_t last = std::min(butterflies, first + chunk);
      if (first >= last) break;
      threads.emplace_back([&, first, last, w] {
        run_stage_range(plan, out.bins, half, first, last, &worker_counts[w]);
      });
    }
  }

  if (counter) {
    for (const OpCounter& c : worker_counts) counter->merge(c);
  }
  out.scale_log2 = plan.config().scaling == Scaling::HalfPerStage ? plan.stages() : 0;
  return out;
}

namespace {

ComplexFixed conj(ComplexFixed c) {
  return {c.re, Fixed16::from_raw(saturate16(-std::int32_t{c.im.raw()}))};
}

}  // namespace

Spectrum inverse_fft(const FftPlan& plan, const Spectrum& spectrum, OpCounter* counter) {
  std::vector<ComplexFixed> conjugated(spectrum.bins.size());
  std::transform(spectrum.bins.begin(), spectrum.bins.end(), conjugated.begin(), conj);
  Spectrum out = fft(plan, Signal(std::move(conjugated)), counter);
  std::transform(out.bins.begin(), out.bins.end(), out.bins.begin(), conj);
  return out;
}

BackendComparison fft_both_backends(std::size_t n, const Signal& sig, const DatapathConfig& cfg) {
  BackendComparison result;
  OpCounter conv_counter;
  OpCounter slice_counter;
  result.conventional = fft(plan(n, Backend::Conventional, cfg), sig, &conv_counter);
  result.digit_slicing = fft(plan(n, Backend::DigitSlicing, cfg), sig, &slice_counter);
  result.conventional_counts = conv_counter.read();
  result.digit_slicing_counts = slice_counter.read();
  return result;
}

}  // namespace dsfft
