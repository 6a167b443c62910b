#include "cli/sample_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dsfft::cli {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view next_token(std::string_view& s) {
  std::size_t i = 0;
  while (i < s.size() && is_space(s[i])) ++i;
  std::size_t j = i;
  while (j < s.size() && !is_space(s[j])) ++j;
  std::string_view tok = s.substr(i, j - i);
  s.remove_prefix(j);
  return tok;
}

double parse_real(std::string_view tok, std::size_t line) {
  double v = 0.0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
    throw SampleFormatError("line " + std::to_string(line) + ": '" + std::string(tok) +
                            "' is not a finite decimal number");
  }
  return v;
}

}  // namespace

std::vector<ComplexFixed> parse_text_samples(std::string_view text) {
  std::vector<ComplexFixed> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    std::string_view rest = line;
    const std::string_view re_tok = next_token(rest);
    if (re_tok.empty()) continue;
    const std::string_view im_tok = next_token(rest);
    if (im_tok.empty() || !next_token(rest).empty()) {
      throw SampleFormatError("line " + std::to_string(line_no) +
                              ": expected exactly two values \"re im\"");
    }
    out.push_back({from_real(parse_real(re_tok, line_no)), from_real(parse_real(im_tok, line_no))});
  }
  return out;
}

std::vector<ComplexFixed> parse_raw_samples(std::string_view bytes) {
  if (bytes.size() % 4 != 0) {
    throw SampleFormatError("offset " + std::to_string(bytes.size() - bytes.size() % 4) +
                            ": trailing partial sample (raw samples are 4 bytes)");
  }
  std::vector<ComplexFixed> out;
  out.reserve(bytes.size() / 4);
  auto word = [&](std::size_t off) {
    const auto lo = static_cast<std::uint8_t>(bytes[off]);
    const auto hi = static_cast<std::uint8_t>(bytes[off + 1]);
    return Fixed16::from_bits(static_cast<std::uint16_t>(lo | (hi << 8)));
  };
  for (std::size_t off = 0; off < bytes.size(); off += 4) out.push_back({word(off), word(off + 2)});
  return out;
}

std::string format_text_samples(const std::vector<ComplexFixed>& samples) {
  std::string out;
  char buf[64];
  for (const ComplexFixed& c : samples) {
    std::snprintf(buf, sizeof buf, "%.6f %.6f\n", to_real(c.re), to_real(c.im));
    out += buf;
  }
  return out;
}

std::string format_raw_samples(const std::vector<ComplexFixed>& samples) {
  std::string out;
  out.reserve(samples.size() * 4);
  auto put = [&](Fixed16 v) {
    out += static_cast<char>(v.bits() & 0xFF);
    out += static_cast<char>(v.bits() >> 8);
  };
  for (const ComplexFixed& c : samples) {
    put(c.re);
    put(c.im);
  }
  return out;
}

std::vector<ComplexFixed> parse_samples(std::string_view data, SampleFormat format) {
  return format == SampleFormat::Text ? parse_text_samples(data) : parse_raw_samples(data);
}

std::string format_samples(const std::vector<ComplexFixed>& samples, SampleFormat format) {
  return format == SampleFormat::Text ? format_text_samples(samples) : format_raw_samples(samples);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SampleFormatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

}  // namespace dsfft::cli
