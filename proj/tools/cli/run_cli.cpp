#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "cli/commands.hpp"

namespace dsfft::cli {
namespace {

const std::map<std::string, Backend> kBackends{{"conv", Backend::Conventional},
                                               {"slice", Backend::DigitSlicing}};
const std::map<std::string, SampleFormat> kFormats{{"text", SampleFormat::Text},
                                                   {"raw", SampleFormat::Raw}};
const std::map<std::string, Scaling> kScalings{{"half", Scaling::HalfPerStage},
                                               {"none", Scaling::None}};
const std::map<std::string, RoundingMode> kRoundings{{"nearest", RoundingMode::NearestHalfUp},
                                                     {"trunc", RoundingMode::Truncate}};
const std::map<std::string, OverflowMode> kOverflows{{"saturate", OverflowMode::Saturate},
                                                     {"wrap", OverflowMode::Wrap}};
const std::map<std::string, VerifyLevel> kLevels{{"quick", VerifyLevel::Quick},
                                                 {"full", VerifyLevel::Full}};

void add_datapath_flags(CLI::App* cmd, DatapathConfig& cfg) {
  cmd->add_option("--scaling", cfg.scaling, "Per-stage scaling")
      ->transform(CLI::CheckedTransformer(kScalings, CLI::ignore_case));
  cmd->add_option("--rounding", cfg.rounding, "Product and scaling rounding")
      ->transform(CLI::CheckedTransformer(kRoundings, CLI::ignore_case));
  cmd->add_option("--overflow", cfg.overflow, "Adder overflow policy")
      ->transform(CLI::CheckedTransformer(kOverflows, CLI::ignore_case));
  cmd->add_option("--blocks", cfg.slice_params.blocks, "Digit-slicing block count b");
  cmd->add_option("--width", cfg.slice_params.width, "Bits per block p");
}

bool slice_params_ok(const DatapathConfig& cfg, const char* cmd, std::ostream& err) {
  const SliceParams sp = cfg.slice_params;
  if (sp.blocks >= 1 && sp.width >= 1 && sp.blocks * sp.width == 16) return true;
  err << "dsfft " << cmd << ": --blocks * --width must equal 16 (got " << sp.blocks << " * "
      << sp.width << ")\n";
  return false;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed-point radix-2 FFT with a multiplier-less digit-slicing butterfly", "dsfft"};
  app.require_subcommand(1);

  FftCommandOptions fft_opts;
  auto* fft_cmd = app.add_subcommand("fft", "Transform a sample file");
  fft_cmd->add_option("input", fft_opts.input, "Sample file")->required();
  fft_cmd->add_option("--n", fft_opts.n, "Expected sample count");
  fft_cmd->add_option("--backend", fft_opts.backend, "Butterfly backend")
      ->transform(CLI::CheckedTransformer(kBackends, CLI::ignore_case));
  fft_cmd->add_option("--format", fft_opts.format, "Input and output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  add_datapath_flags(fft_cmd, fft_opts.cfg);
  fft_cmd->add_option("--out", fft_opts.out, "Output file (default stdout)");
  fft_cmd->add_option("--report", fft_opts.report, "Write a JSON run report");

  RomOptions rom_opts;
  auto* rom_cmd = app.add_subcommand("rom", "Emit the twiddle ROM as hex");
  rom_cmd->add_option("--n", rom_opts.n, "Transform size")->required();
  rom_cmd->add_option("--out", rom_opts.out, "Output file (default stdout)");

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Run the self-check suites");
  verify_cmd->add_option("--level", verify_opts.level, "quick samples, full exhausts")
      ->transform(CLI::CheckedTransformer(kLevels, CLI::ignore_case));
  verify_cmd->add_option("--seed", verify_opts.seed, "Seed for randomized suites");

  BenchOptions bench_opts;
  auto* bench_cmd = app.add_subcommand("bench", "Time both backends and count operations");
  bench_cmd->add_option("--n", bench_opts.sizes, "Transform sizes")->delimiter(',');
  bench_cmd->add_option("--trials", bench_opts.trials, "Trials per size and backend")
      ->check(CLI::PositiveNumber);
  add_datapath_flags(bench_cmd, bench_opts.cfg);
  bench_cmd->add_option("--report", bench_opts.report, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*fft_cmd) {
      if (!slice_params_ok(fft_opts.cfg, "fft", err)) return kUsageError;
      return cmd_fft(fft_opts, out, err);
    }
    if (*rom_cmd) return cmd_rom(rom_opts, out, err);
    if (*verify_cmd) return cmd_verify(verify_opts, out);
    if (*bench_cmd) {
      if (!slice_params_ok(bench_opts.cfg, "bench", err)) return kUsageError;
      return cmd_bench(bench_opts, out, err);
    }
  } catch (const std::exception& e) {
    err << "dsfft: " << e.what() << '\n';
    return kInputError;
  }
  return kUsageError;
}

}  // namespace dsfft::cli
