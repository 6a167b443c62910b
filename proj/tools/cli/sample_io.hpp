// Sample file formats for the command-line tool.
//
//   text: one sample per line, "re im" as two decimal reals
//   raw:  interleaved little-endian int16 words re, im (bit-exact)

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dsfft/fixed.hpp"

namespace dsfft::cli {

enum class SampleFormat { Text, Raw };

class SampleFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Blank lines are skipped. Errors name the 1-based line.
std::vector<ComplexFixed> parse_text_samples(std::string_view text);
/// Errors name the byte offset of a trailing partial sample.
std::vector<ComplexFixed> parse_raw_samples(std::string_view bytes);

/// Six decimal places per component.
std::string format_text_samples(const std::vector<ComplexFixed>& samples);
std::string format_raw_samples(const std::vector<ComplexFixed>& samples);

std::vector<ComplexFixed> parse_samples(std::string_view data, SampleFormat format);
std::string format_samples(const std::vector<ComplexFixed>& samples, SampleFormat format);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view data);

}  // namespace dsfft::cli
