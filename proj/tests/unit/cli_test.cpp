#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/sample_io.hpp"
#include "test_support.hpp"

namespace dsfft::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dsfft_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& data) const {
    write_file(path(name), data);
    return path(name);
  }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "dsfft");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str({});
    err_.str({});
    return run_cli(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, ImpulseTextTransform) {
  const std::string in = write("impulse.txt", "0.5 0\n0 0\n0 0\n0 0\n");
  ASSERT_EQ(run({"fft", in, "--scaling", "half", "--out", path("out.txt")}), kOk) << err_.str();
  EXPECT_EQ(read_file(path("out.txt")),
            "0.125000 0.000000\n0.125000 0.000000\n0.125000 0.000000\n0.125000 0.000000\n");
  ASSERT_EQ(run({"fft", in}), kOk);
  EXPECT_EQ(out_.str(), read_file(path("out.txt")));
}

TEST_F(CliTest, BackendsProduceIdenticalFiles) {
  std::mt19937_64 rng(41);
  const auto x = test::random_signal(rng, 256);
  for (const char* fmt : {"text", "raw"}) {
    const std::string in = write(std::string("in.") + fmt,
                                 format_samples(x, std::string(fmt) == "raw" ? SampleFormat::Raw : SampleFormat::Text));
    ASSERT_EQ(run({"fft", in, "--format", fmt, "--backend", "conv", "--out", path("conv")}), kOk);
    ASSERT_EQ(run({"fft", in, "--format", fmt, "--backend", "slice", "--out", path("slice")}), kOk);
    EXPECT_EQ(read_file(path("conv")), read_file(path("slice"))) << fmt;
  }
}

TEST_F(CliTest, RawFormatIsBitExact) {
  std::mt19937_64 rng(42);
  const auto x = test::random_signal(rng, 32);
  const std::string in = write("in.raw", format_raw_samples(x));
  ASSERT_EQ(run({"fft", in, "--format", "raw", "--out", path("out.raw")}), kOk);
  const auto expected = fft(plan(32, Backend::DigitSlicing), Signal(x));
  EXPECT_EQ(parse_raw_samples(read_file(path("out.raw"))), expected.bins);
}

TEST_F(CliTest, InputErrorsExitOne) {
  EXPECT_EQ(run({"fft", write("six.txt", "1 0\n1 0\n1 0\n1 0\n1 0\n1 0\n")}), kInputError);
  EXPECT_NE(err_.str().find("power of two"), std::string::npos);

  EXPECT_EQ(run({"fft", write("bad.txt", "0.5 0\n0.1 zz\n0 0\n0 0\n")}), kInputError);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos) << err_.str();

  EXPECT_EQ(run({"fft", write("three.txt", "0.5 0 1\n0 0\n")}), kInputError);
  EXPECT_NE(err_.str().find("line 1"), std::string::npos);

  EXPECT_EQ(run({"fft", write("odd.raw", std::string(10, '\0')), "--format", "raw"}), kInputError);
  EXPECT_NE(err_.str().find("offset 8"), std::string::npos) << err_.str();

  EXPECT_EQ(run({"fft", path("missing.txt")}), kInputError);
  EXPECT_EQ(run({"fft", write("four.txt", "0 0\n0 0\n0 0\n0 0\n"), "--n", "8"}), kInputError);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  const std::string in = write("imp.txt", "0.5 0\n0 0\n");
  EXPECT_EQ(run({"fft", in, "--blocks", "3"}), kUsageError);
  EXPECT_EQ(run({"fft", in, "--backend", "fpga"}), kUsageError);
  EXPECT_EQ(run({"fft", in, "--rounding", "banker"}), kUsageError);
  EXPECT_EQ(run({}), kUsageError);
  EXPECT_EQ(run({"frobnicate"}), kUsageError);
  EXPECT_EQ(run({"bench", "--n", "12"}), kUsageError);
  EXPECT_EQ(run({"bench", "--trials", "0"}), kUsageError);
}

TEST_F(CliTest, AlternateSlicingWidthsAgree) {
  std::mt19937_64 rng(43);
  const std::string in = write("in.txt", format_text_samples(test::random_signal(rng, 64)));
  ASSERT_EQ(run({"fft", in, "--out", path("a")}), kOk);
  ASSERT_EQ(run({"fft", in, "--blocks", "2", "--width", "8", "--out", path("b")}), kOk);
  ASSERT_EQ(run({"fft", in, "--blocks", "16", "--width", "1", "--out", path("c")}), kOk);
  EXPECT_EQ(read_file(path("a")), read_file(path("b")));
  EXPECT_EQ(read_file(path("a")), read_file(path("c")));
}

TEST_F(CliTest, FftReportEchoesConfig) {
  std::mt19937_64 rng(44);
  const std::string in = write("in.txt", format_text_samples(test::random_signal(rng, 256)));
  ASSERT_EQ(run({"fft", in, "--backend", "conv", "--rounding", "trunc", "--report", path("r.json")}), kOk);
  const auto j = nlohmann::json::parse(read_file(path("r.json")));
  EXPECT_EQ(j["config"]["backend"], "conv");
  EXPECT_EQ(j["config"]["n"], 256);
  EXPECT_EQ(j["config"]["rounding"], "trunc");
  EXPECT_EQ(j["config"]["overflow"], "saturate");
  EXPECT_EQ(j["config"]["scaling"], "half");
  EXPECT_EQ(j["config"]["b"], 4);
  EXPECT_EQ(j["config"]["p"], 4);
  EXPECT_GT(j["timing"]["wall_ns"].get<long long>(), 0);
  EXPECT_EQ(j["counts"]["real_multiplies"], 4 * 128 * 8);
  for (const char* key : {"max_abs_err", "rms_err", "sqnr_db", "worst_bin"}) {
    EXPECT_TRUE(j["error"].contains(key)) << key;
  }
  EXPECT_GE(j["error"]["max_abs_err"].get<double>(), j["error"]["rms_err"].get<double>());
}

TEST_F(CliTest, RomCommand) {
  ASSERT_EQ(run({"rom", "--n", "2", "--out", path("r2")}), kOk);
  EXPECT_EQ(read_file(path("r2")), "7FFF 0000\n");
  ASSERT_EQ(run({"rom", "--n", "4"}), kOk);
  EXPECT_EQ(out_.str(), "7FFF 0000\n0000 7FFF\n");
  EXPECT_EQ(run({"rom", "--n", "7"}), kUsageError);
  EXPECT_EQ(run({"rom", "--n", "0"}), kUsageError);
  ASSERT_EQ(run({"rom", "--n", "1024", "--out", path("r1024")}), kOk);
  EXPECT_EQ(rom_from_hex(read_file(path("r1024"))), make_rom(1024));
}

TEST_F(CliTest, VerifyQuickPasses) {
  ASSERT_EQ(run({"verify", "--level", "quick"}), kOk) << out_.str();
  std::istringstream lines(out_.str());
  int count = 0;
  for (std::string line; std::getline(lines, line); ++count) EXPECT_EQ(line.rfind("PASS ", 0), 0u) << line;
  EXPECT_EQ(count, 5);
}

TEST_F(CliTest, VerifyDetectsRoundingFault) {
  VerifyOptions opts;
  opts.slicing_rounding_fault = RoundingMode::Truncate;
  std::ostringstream out;
  EXPECT_EQ(cmd_verify(opts, out), kVerifyFailed);
  EXPECT_NE(out.str().find("FAIL multiplier-equivalence"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("PASS slicing-even-roundtrip"), std::string::npos);
}

TEST_F(CliTest, VerifyFullSuiteSizes) {
  VerifyOptions opts;
  opts.level = VerifyLevel::Full;
  const auto results = run_verify(opts);
  ASSERT_EQ(results.size(), 5u);
  EXPECT_EQ(results[0].cases, 65536u);
  EXPECT_EQ(results[1].cases, 131072u);
  EXPECT_EQ(results[2].cases, 2u * 8u * 65536u);
  EXPECT_EQ(results[3].cases, 1'000'000u);
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << r.detail;
}

TEST_F(CliTest, BenchReport) {
  ASSERT_EQ(run({"bench", "--n", "64", "--trials", "3", "--report", path("b.json")}), kOk) << err_.str();
  const auto j = nlohmann::json::parse(read_file(path("b.json")));
  EXPECT_TRUE(j["multiplier_free"].get<bool>());
  EXPECT_TRUE(j["spectra_bit_identical"].get<bool>());
  ASSERT_EQ(j["results"].size(), 2u);
  for (const auto& row : j["results"]) {
    EXPECT_EQ(row["config"]["n"], 64);
    EXPECT_GT(row["timing"]["wall_ns_median"].get<long long>(), 0);
    EXPECT_EQ(row["timing"]["trials"], 3);
    if (row["config"]["backend"] == "conv") {
      EXPECT_EQ(row["counts"]["real_multiplies"], 768);
    } else {
      EXPECT_EQ(row["counts"]["real_multiplies"], 0);
      EXPECT_EQ(row["counts"]["table_lookups"], 3072);
    }
  }
  EXPECT_NE(out_.str().find("multiplier-free digit slicing: yes"), std::string::npos);
}

TEST(SampleIo, TextRawTextPreservesQuantizedValues) {
  std::mt19937_64 rng(45);
  std::uniform_real_distribution<double> d(-1.2, 1.2);
  for (int t = 0; t < 50; ++t) {
    std::string text;
    std::vector<ComplexFixed> expected;
    for (int i = 0; i < 64; ++i) {
      const double re = d(rng), im = d(rng);
      text += std::to_string(re) + " " + std::to_string(im) + "\n";
      expected.push_back({from_real(std::stod(std::to_string(re))), from_real(std::stod(std::to_string(im)))});
    }
    const auto parsed = parse_text_samples(text);
    ASSERT_EQ(parsed, expected);
    const auto via_raw = parse_raw_samples(format_raw_samples(parsed));
    ASSERT_EQ(via_raw, parsed);
    ASSERT_EQ(parse_text_samples(format_text_samples(via_raw)), parsed);
  }
}

TEST(SampleIo, BlankLinesAndSignsAccepted) {
  const auto s = parse_text_samples("\n +0.5\t-0.25 \r\n\n-1 1e-1\n");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].re.bits(), 0x4000);
  EXPECT_EQ(s[0].im.bits(), 0xE000);
  EXPECT_EQ(s[1].re.bits(), 0x8000);
}

TEST(Binary, ExitCodesFromProcess) {
  const std::string exe = DSFFT_CLI_PATH;
  auto code = [](const std::string& cmd) {
    const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
  };
  EXPECT_EQ(code(exe + " rom --n 8"), 0);
  EXPECT_EQ(code(exe + " rom --n 7"), 2);
  EXPECT_EQ(code(exe + " fft /nonexistent/file.txt"), 1);
  EXPECT_EQ(code(exe + " --help"), 0);
}

}  // namespace
}  // namespace dsfft::cli
