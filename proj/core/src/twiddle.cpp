#include "dsfft/twiddle.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace dsfft {

bool is_power_of_two(std::size_t n) { return n != 0 && std::has_single_bit(n); }

int log2_exact(std::size_t n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("size is not a power of two");
  return std::countr_zero(n);
}

namespace {

void check_size(std::size_t n) {
  if (n < 2 || !is_power_of_two(n)) {
    throw std::invalid_argument("transform size must be a power of two >= 2, got " +
                                std::to_string(n));
  }
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

Fixed16 parse_word(std::string_view field, std::size_t line) {
  std::uint32_t v = 0;
  for (char c : field) {
    const int d = hex_value(c);
    if (d < 0) throw RomParseError(line, "non-hex character '" + std::string(1, c) + "'");
    v = (v << 4) | static_cast<std::uint32_t>(d);
  }
  return Fixed16::from_bits(static_cast<std::uint16_t>(v));
}

}  // namespace

TwiddleRom::TwiddleRom(std::size_t n) : n_(n) {
  check_size(n);
  entries_.reserve(n / 2);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double angle = step * static_cast<double>(k);
    entries_.push_back({from_real(std::cos(angle)), from_real(std::sin(angle))});
  }
}

TwiddleRom::TwiddleRom(std::size_t n, std::vector<Twiddle> entries)
    : n_(n), entries_(std::move(entries)) {
  check_size(n);
  if (entries_.size() != n / 2) {
    throw std::invalid_argument("twiddle rom: expected n/2 entries");
  }
}

TwiddleRom make_rom(std::size_t n) { return TwiddleRom(n); }

ComponentTable::ComponentTable(Fixed16 w, SliceParams params)
    : coeff_(w), mask_(static_cast<std::int32_t>((1u << params.width) - 1u)) {
  const std::size_t size = std::size_t{1} << params.width;
  const std::int32_t half = std::int32_t{1} << (params.width - 1);
  unsigned_.resize(size);
  top_.resize(size);
  for (std::size_t pattern = 0; pattern < size; ++pattern) {
    const auto d = static_cast<std::int32_t>(pattern);
    const std::int32_t signed_d = d >= half ? d - static_cast<std::int32_t>(size) : d;
    unsigned_[pattern] = d * w.raw();
    top_[pattern] = signed_d * w.raw();
  }
}

BlockProductTable make_block_tables(const Twiddle& t, SliceParams params) {
  validate_even(params);
  return {params, t, ComponentTable(t.wr, params), ComponentTable(t.wi, params)};
}

std::size_t block_table_bytes(SliceParams params) {
  return 2 * 2 * (std::size_t{1} << params.width) * sizeof(std::int32_t);
}

std::string rom_to_hex(const TwiddleRom& rom) {
  std::string out;
  out.reserve(rom.size() * 10);
  for (const Twiddle& t : rom.entries()) {
    out += to_hex(t.wr);
    out += ' ';
    out += to_hex(t.wi);
    out += '\n';
  }
  return out;
}

TwiddleRom rom_from_hex(std::string_view text) {
  std::vector<Twiddle> entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.size() != 9 || line[4] != ' ') {
      throw RomParseError(line_no, "expected \"RRRR IIII\" (two 4-digit hex words)");
    }
    entries.push_back({parse_word(line.substr(0, 4), line_no), parse_word(line.substr(5, 4), line_no)});
  }
  if (entries.empty() || !is_power_of_two(entries.size())) {
    throw RomStructureError("twiddle rom: " + std::to_string(entries.size()) +
                            " entries is not N/2 for a power-of-two N");
  }
  const std::size_t n = entries.size() * 2;
  return TwiddleRom(n, std::move(entries));
}

}  // namespace dsfft
