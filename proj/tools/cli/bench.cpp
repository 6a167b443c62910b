#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>

#include "cli/commands.hpp"

namespace dsfft::cli {
namespace {

Signal bench_signal(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> amp(-0.9, 0.9);
  std::vector<ComplexFixed> x(n);
  for (auto& c : x) c = {from_real(amp(rng)), from_real(amp(rng))};
  return Signal(std::move(x));
}

std::int64_t median(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace

nlohmann::json run_bench(const BenchOptions& opts) {
  if (opts.trials < 1) throw std::invalid_argument("--trials must be at least 1");
  nlohmann::json rows = nlohmann::json::array();
  bool multiplier_free = true;
  bool spectra_match = true;

  for (std::size_t n : opts.sizes) {
    const Signal sig = bench_signal(n);
    std::optional<Spectrum> first;
    for (Backend backend : {Backend::Conventional, Backend::DigitSlicing}) {
      const FftPlan p(n, backend, opts.cfg);
      OpCounts counts;
      std::vector<std::int64_t> times;
      for (int t = 0; t < opts.trials; ++t) {
        OpCounter counter;
        const auto start = std::chrono::steady_clock::now();
        const Spectrum s = fft(p, sig, &counter);
        const auto stop = std::chrono::steady_clock::now();
        times.push_back(std::max<std::int64_t>(
            1, std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
        counts = counter.read();
        if (!first) {
          first = s;
        } else if (!(*first == s)) {
          spectra_match = false;
        }
      }
      if (backend == Backend::DigitSlicing && counts.real_multiplies != 0) multiplier_free = false;
      rows.push_back({
          {"config", config_json(backend, n, opts.cfg)},
          {"timing", {{"wall_ns_median", median(times)}, {"trials", opts.trials}}},
          {"counts", counts_json(counts)},
      });
    }
  }
  return {
      {"command", "bench"},
      {"results", rows},
      {"multiplier_free", multiplier_free},
      {"spectra_bit_identical", spectra_match},
  };
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  for (std::size_t n : opts.sizes) {
    if (n < 2 || !is_power_of_two(n)) {
      err << "dsfft bench: --n values must be powers of two >= 2, got " << n << '\n';
      return kUsageError;
    }
  }
  nlohmann::json report;
  try {
    report = run_bench(opts);
  } catch (const std::invalid_argument& e) {
    err << "dsfft bench: " << e.what() << '\n';
    return kUsageError;
  }

  char line[160];
  std::snprintf(line, sizeof line, "%-6s %6s %14s %12s %12s %14s %10s\n", "backend", "n",
                "median_ns", "real_mul", "real_add", "table_lookup", "shifts");
  out << line;
  for (const auto& row : report["results"]) {
    const auto& c = row["counts"];
    std::snprintf(line, sizeof line, "%-6s %6llu %14lld %12llu %12llu %14llu %10llu\n",
                  row["config"]["backend"].get<std::string>().c_str(),
                  row["config"]["n"].get<unsigned long long>(),
                  row["timing"]["wall_ns_median"].get<long long>(),
                  c["real_multiplies"].get<unsigned long long>(),
                  c["real_adds"].get<unsigned long long>(),
                  c["table_lookups"].get<unsigned long long>(),
                  c["shifts"].get<unsigned long long>());
    out << line;
  }
  out << "multiplier-free digit slicing: " << (report["multiplier_free"].get<bool>() ? "yes" : "NO")
      << '\n';
  if (!opts.report.empty()) write_file(opts.report, report.dump(2) + "\n");
  return kOk;
}

}  // namespace dsfft::cli
