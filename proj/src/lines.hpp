#pragma once

// Shared helpers for the line-oriented file formats.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qx::detail {

struct Line {
  std::size_t number;  // 1-based
  std::string_view text;
};

/// Splits on '\n', strips a trailing '\r', drops blank lines and lines whose
/// first character is '#'.
std::vector<Line> content_lines(std::string_view text);

/// Splits on a single separator character; empty fields are kept.
std::vector<std::string_view> split_on(std::string_view text, char sep);

std::string_view trim(std::string_view text);

/// Parses a base-10 unsigned integer; the whole string must be consumed.
bool parse_unsigned(std::string_view text, unsigned long long& out);

}  // namespace qx::detail
