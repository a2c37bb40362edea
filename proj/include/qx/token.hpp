#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qx {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a string cannot be used as a token.
class TokenError : public Error {
 public:
  using Error::Error;
};

/// The one token allowed to contain `#`; separates question from sentence.
inline constexpr std::string_view kReservedSeparator = "##";

/// A nonempty symbol without whitespace or `#`, or the reserved separator
/// `##`. Equality is exact byte equality; no case folding happens anywhere.
class Token {
 public:
  explicit Token(std::string text);

  static bool is_valid(std::string_view text) noexcept;

  const std::string& str() const noexcept { return text_; }
  std::string_view view() const noexcept { return text_; }

  friend bool operator==(const Token&, const Token&) = default;
  friend auto operator<=>(const Token&, const Token&) = default;

 private:
  std::string text_;
};

inline std::ostream& operator<<(std::ostream& os, const Token& t) { return os << t.str(); }

using Sentence = std::vector<Token>;

/// Splits on runs of spaces and tabs. Every piece must be a valid token.
Sentence split_tokens(std::string_view text);

/// Joins tokens with single spaces.
std::string join_tokens(const Sentence& tokens);

}  // namespace qx

template <>
struct std::hash<qx::Token> {
  std::size_t operator()(const qx::Token& t) const noexcept { return std::hash<std::string>{}(t.str()); }
};
