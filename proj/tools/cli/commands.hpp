// Subcommands of the dsfft tool, callable without going through argv.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli/sample_io.hpp"
#include "dsfft/butterfly.hpp"
#include "dsfft/fft.hpp"
#include "dsfft/oracle.hpp"
#include "json.hpp"

namespace dsfft::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kUsageError = 2, kVerifyFailed = 3 };

struct FftCommandOptions {
  std::string input;
  std::optional<std::size_t> n;
  Backend backend = Backend::DigitSlicing;
  SampleFormat format = SampleFormat::Text;
  DatapathConfig cfg;
  std::string out;     // empty: stdout
  std::string report;  // empty: no report
};

struct RomOptions {
  std::size_t n = 0;
  std::string out;  // empty: stdout
};

enum class VerifyLevel { Quick, Full };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::Quick;
  std::uint64_t seed = 0x5eed;
  // Fault injection for testing the verifier: run the digit-slicing side of
  // the equivalence suites with this rounding instead of the reference one.
  std::optional<RoundingMode> slicing_rounding_fault;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::string detail;
};

struct BenchOptions {
  std::vector<std::size_t> sizes{64};
  int trials = 5;
  DatapathConfig cfg;
  std::string report;  // empty: no JSON file
};

nlohmann::json config_json(Backend backend, std::size_t n, const DatapathConfig& cfg);
nlohmann::json counts_json(const OpCounts& c);
nlohmann::json error_json(const oracle::ErrorReport& e);

int cmd_fft(const FftCommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_rom(const RomOptions& opts, std::ostream& out, std::ostream& err);

std::vector<SuiteResult> run_verify(const VerifyOptions& opts);
int cmd_verify(const VerifyOptions& opts, std::ostream& out);

/// Runs both backends at every size and returns the report document.
nlohmann::json run_bench(const BenchOptions& opts);
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dsfft::cli
