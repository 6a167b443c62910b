// Twiddle factor ROM and the per-block partial-product tables that replace
// the general multiplier in the digit-slicing datapath.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dsfft/fixed.hpp"
#include "dsfft/slicing.hpp"

namespace dsfft {

/// W = wr - j*wi, with wr = cos(2*pi*k/N) and wi = sin(2*pi*k/N) quantized.
struct Twiddle {
  Fixed16 wr;
  Fixed16 wi;

  friend constexpr bool operator==(const Twiddle&, const Twiddle&) = default;
};

bool is_power_of_two(std::size_t n);
int log2_exact(std::size_t n);

class TwiddleRom {
 public:
  /// Entry k = W_N^k for k in [0, n/2). Throws std::invalid_argument unless n
  /// is a power of two >= 2.
  explicit TwiddleRom(std::size_t n);
  TwiddleRom(std::size_t n, std::vector<Twiddle> entries);

  std::size_t n() const { return n_; }
  const std::vector<Twiddle>& entries() const { return entries_; }
  const Twiddle& operator[](std::size_t k) const { return entries_[k]; }
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const TwiddleRom&, const TwiddleRom&) = default;

 private:
  std::size_t n_;
  std::vector<Twiddle> entries_;
};

TwiddleRom make_rom(std::size_t n);

/// Partial products d * w.raw for one twiddle component, indexed by the
/// block's p-bit pattern. The top table maps the pattern to its signed digit
/// first, so a negative top block needs no separate subtraction.
class ComponentTable {
 public:
  ComponentTable() = default;
  ComponentTable(Fixed16 w, SliceParams params);

  Fixed16 coefficient() const { return coeff_; }
  /// T[d] for an unsigned digit d in [0, 2^p).
  std::int32_t lookup(std::int32_t digit) const {
    return unsigned_[static_cast<std::size_t>(digit)];
  }
  /// T[d] for a signed top digit d in [-2^(p-1), 2^(p-1)).
  std::int32_t lookup_top(std::int32_t digit) const {
    return top_[static_cast<std::size_t>(digit & mask_)];
  }
  std::size_t entries() const { return unsigned_.size(); }

 private:
  Fixed16 coeff_{};
  std::int32_t mask_ = 0;
  std::vector<std::int32_t> unsigned_;
  std::vector<std::int32_t> top_;
};

struct BlockProductTable {
  SliceParams params;
  Twiddle twiddle;
  ComponentTable wr;
  ComponentTable wi;
};

/// Precomputes exact integer partial products for both twiddle components.
BlockProductTable make_block_tables(const Twiddle& t, SliceParams params = kDefaultSlicing);

/// Bytes of table storage one BlockProductTable needs for the given params.
std::size_t block_table_bytes(SliceParams params);

/// One "RRRR IIII" line per entry, k ascending, newline-terminated.
std::string rom_to_hex(const TwiddleRom& rom);

class RomParseError : public std::runtime_error {
 public:
  RomParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class RomStructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses rom_to_hex output. Throws RomParseError for a malformed line and
/// RomStructureError when the entry count is not N/2 for a power-of-two N.
TwiddleRom rom_from_hex(std::string_view text);

}  // namespace dsfft
