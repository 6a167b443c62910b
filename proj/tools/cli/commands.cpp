#include "cli/commands.hpp"

#include <chrono>
#include <iostream>

#include "dsfft/twiddle.hpp"

namespace dsfft::cli {

nlohmann::json config_json(Backend backend, std::size_t n, const DatapathConfig& cfg) {
  return {
      {"backend", to_string(backend)},
      {"n", n},
      {"rounding", to_string(cfg.rounding)},
      {"overflow", to_string(cfg.overflow)},
      {"scaling", to_string(cfg.scaling)},
      {"b", cfg.slice_params.blocks},
      {"p", cfg.slice_params.width},
  };
}

nlohmann::json counts_json(const OpCounts& c) {
  return {
      {"real_multiplies", c.real_multiplies},
      {"real_adds", c.real_adds},
      {"table_lookups", c.table_lookups},
      {"shifts", c.shifts},
  };
}

nlohmann::json error_json(const oracle::ErrorReport& e) {
  nlohmann::json j = {
      {"max_abs_err", e.max_abs_err},
      {"rms_err", e.rms_err},
      {"sqnr_db", nullptr},
      {"worst_bin", e.worst_bin},
  };
  if (e.sqnr_db) j["sqnr_db"] = *e.sqnr_db;
  return j;
}

int cmd_fft(const FftCommandOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<ComplexFixed> samples;
  try {
    samples = parse_samples(read_file(opts.input), opts.format);
  } catch (const SampleFormatError& e) {
    err << "dsfft fft: " << opts.input << ": " << e.what() << '\n';
    return kInputError;
  }
  if (samples.size() < 2 || !is_power_of_two(samples.size())) {
    err << "dsfft fft: " << opts.input << ": sample count " << samples.size()
        << " is not a power of two >= 2\n";
    return kInputError;
  }
  if (opts.n && *opts.n != samples.size()) {
    err << "dsfft fft: " << opts.input << ": file holds " << samples.size()
        << " samples but --n is " << *opts.n << '\n';
    return kInputError;
  }

  const std::size_t n = samples.size();
  std::optional<FftPlan> p;
  try {
    p.emplace(n, opts.backend, opts.cfg);
  } catch (const std::invalid_argument& e) {
    err << "dsfft fft: " << e.what() << '\n';
    return kUsageError;
  }

  const Signal sig(samples);
  OpCounter counter;
  const auto start = std::chrono::steady_clock::now();
  const Spectrum spectrum = fft(*p, sig, &counter);
  const auto stop = std::chrono::steady_clock::now();

  const std::string encoded = format_samples(spectrum.bins, opts.format);
  if (opts.out.empty()) {
    out << encoded;
  } else {
    write_file(opts.out, encoded);
  }

  if (!opts.report.empty()) {
    const auto reference = oracle::dft_reference(oracle::to_complex(samples));
    const auto wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
    nlohmann::json report = {
        {"command", "fft"},
        {"config", config_json(opts.backend, n, opts.cfg)},
        {"timing", {{"wall_ns", std::max<std::int64_t>(wall_ns, 1)}}},
        {"counts", counts_json(counter.read())},
        {"scale_log2", spectrum.scale_log2},
        {"error", error_json(oracle::compare(spectrum, reference))},
    };
    write_file(opts.report, report.dump(2) + "\n");
  }
  return kOk;
}

int cmd_rom(const RomOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.n < 2 || !is_power_of_two(opts.n)) {
    err << "dsfft rom: --n must be a power of two >= 2, got " << opts.n << '\n';
    return kUsageError;
  }
  const std::string text = rom_to_hex(make_rom(opts.n));
  if (opts.out.empty()) {
    out << text;
  } else {
    write_file(opts.out, text);
  }
  return kOk;
}

}  // namespace dsfft::cli
