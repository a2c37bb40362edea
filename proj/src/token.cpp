#include "qx/token.hpp"

#include <algorithm>

namespace qx {

namespace {

bool is_forbidden(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f' || c == '#';
}

}  // namespace

Token::Token(std::string text) : text_(std::move(text)) {
  if (!is_valid(text_)) {
    throw TokenError("invalid token '" + text_ + "': tokens are nonempty and contain no whitespace or '#' (except '##')");
  }
}

bool Token::is_valid(std::string_view text) noexcept {
  if (text == kReservedSeparator) return true;
  return !text.empty() && std::none_of(text.begin(), text.end(), is_forbidden);
}

Sentence split_tokens(std::string_view text) {
  Sentence out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    if (j > i) out.emplace_back(std::string(text.substr(i, j - i)));
    i = j;
  }
  return out;
}

std::string join_tokens(const Sentence& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.str();
  }
  return out;
}

}  // namespace qx
