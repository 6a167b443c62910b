#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dsfft/twiddle.hpp"
#include "test_support.hpp"

namespace dsfft {
namespace {

using test::bits;
using test::kLsb;

TEST(MakeRom, Examples) {
  const TwiddleRom r2 = make_rom(2);
  ASSERT_EQ(r2.size(), 1u);
  EXPECT_EQ(r2[0], (Twiddle{bits(0x7FFF), bits(0x0000)}));

  // sin(pi/2) = 1 clamps to 0x7FFF.
  const TwiddleRom r4 = make_rom(4);
  ASSERT_EQ(r4.size(), 2u);
  EXPECT_EQ(r4[0], (Twiddle{bits(0x7FFF), bits(0x0000)}));
  EXPECT_EQ(r4[1], (Twiddle{bits(0x0000), bits(0x7FFF)}));

  // round(cos(pi/4) * 32768) = round(sin(pi/4) * 32768) = 23170 (mpmath, 50 digits).
  EXPECT_EQ(make_rom(8)[1], (Twiddle{bits(0x5A82), bits(0x5A82)}));
}

TEST(MakeRom, RejectsNonPowerOfTwo) {
  for (std::size_t n : {0u, 1u, 3u, 6u, 12u, 100u}) {
    EXPECT_THROW(make_rom(n), std::invalid_argument) << n;
  }
}

TEST(MakeRom, QuantizationAndUnitCircleUpTo4096) {
  for (std::size_t n = 2; n <= 4096; n *= 2) {
    const TwiddleRom rom = make_rom(n);
    ASSERT_EQ(rom.n(), n);
    ASSERT_EQ(rom.size(), n / 2);
    EXPECT_EQ(rom[0], (Twiddle{bits(0x7FFF), bits(0x0000)}));
    for (std::size_t k = 0; k < rom.size(); ++k) {
      const long double angle = 2.0L * std::numbers::pi_v<long double> * k / n;
      const double wr = to_real(rom[k].wr), wi = to_real(rom[k].wi);
      ASSERT_LE(std::abs(wr - static_cast<double>(std::cos(angle))), kLsb) << n << " " << k;
      ASSERT_LE(std::abs(wi - static_cast<double>(std::sin(angle))), kLsb) << n << " " << k;
      const double r2 = wr * wr + wi * wi;
      ASSERT_GE(r2, 1.0 - std::ldexp(1.0, -12));
      ASSERT_LE(r2, 1.0 + std::ldexp(1.0, -12));
    }
  }
}

TEST(BlockTables, Examples) {
  const BlockProductTable t = make_block_tables(Twiddle{bits(0x4000), bits(0x5A82)});
  EXPECT_EQ(t.wr.lookup(0), 0);
  EXPECT_EQ(t.wr.lookup(1), 16384);
  EXPECT_EQ(t.wr.lookup(2), 32768);
  EXPECT_EQ(t.wi.lookup(0), 0);
  EXPECT_EQ(t.wi.lookup(15), 347550);  // 15 * 23170
  EXPECT_EQ(t.wr.entries(), 16u);
}

TEST(BlockTables, LinearAndSignCorrected) {
  for (std::uint16_t w : {0x7FFF, 0x5A82, 0x0000, 0x8000, 0x8001, 0xA57E, 0x0001}) {
    const ComponentTable t(bits(w), kDefaultSlicing);
    const std::int32_t one = t.lookup(1);
    EXPECT_EQ(one, static_cast<std::int16_t>(w));
    for (std::int32_t d = 0; d < 16; ++d) {
      EXPECT_EQ(t.lookup(d), d * one);
      for (std::int32_t e = 0; d + e < 16; ++e) EXPECT_EQ(t.lookup(d + e), t.lookup(d) + t.lookup(e));
    }
    for (std::int32_t d = -8; d < 8; ++d) EXPECT_EQ(t.lookup_top(d), d * one) << d;
  }
}

TEST(BlockTables, RejectsOddParams) {
  EXPECT_THROW(make_block_tables(Twiddle{}, SliceParams{5, 4}), std::invalid_argument);
}

TEST(RomHex, Examples) {
  EXPECT_EQ(rom_to_hex(make_rom(2)), "7FFF 0000\n");
  EXPECT_EQ(rom_to_hex(make_rom(4)), "7FFF 0000\n0000 7FFF\n");
  EXPECT_EQ(rom_from_hex("7FFF 0000\n"), make_rom(2));
  EXPECT_EQ(rom_from_hex("7FFF 0000\n0000 7FFF\n"), make_rom(4));
}

TEST(RomHex, RoundTripAllSizes) {
  for (std::size_t n = 2; n <= 4096; n *= 2) {
    const TwiddleRom rom = make_rom(n);
    const std::string text = rom_to_hex(rom);
    ASSERT_EQ(rom_from_hex(text), rom) << n;
    ASSERT_EQ(rom_to_hex(rom_from_hex(text)), text);
  }
}

TEST(RomHex, ParseErrorsNameTheLine) {
  try {
    rom_from_hex("7FFF 0000\n7FF 0000\n");
    FAIL() << "expected RomParseError";
  } catch (const RomParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  try {
    rom_from_hex("7FFF 0000\n0000 7FFF\n5A82 5AG2\n5A82 5A82\n");
    FAIL() << "expected RomParseError";
  } catch (const RomParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(rom_from_hex("7FFF\t0000\n"), RomParseError);
  EXPECT_THROW(rom_from_hex("7FFF 0000 \n"), RomParseError);
}

TEST(RomHex, StructureErrors) {
  EXPECT_THROW(rom_from_hex(""), RomStructureError);
  EXPECT_THROW(rom_from_hex("7FFF 0000\n0000 7FFF\n5A82 5A82\n"), RomStructureError);
}

}  // namespace
}  // namespace dsfft
