#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qx/token.hpp"

namespace qx {

enum class QuestionKind { yes_no, wh, alternative };

std::string_view to_string(QuestionKind kind) noexcept;

struct Question {
  Token id;
  QuestionKind kind = QuestionKind::wh;
};

struct QAEntry {
  Sentence sentence;
  Question question;
  Token answer;
};

/// Raised when a table would map one (sentence, question) pair to two answers.
class FunctionalityError : public Error {
 public:
  using Error::Error;
};

/// Raised by the line-oriented readers. `line()` is 1-based; 0 means the
/// problem concerns the input as a whole.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The extensional question-answering relation: (sentence, question) -> answer.
/// Entries are kept in insertion order; re-adding an identical entry is a no-op.
class QATable {
 public:
  void add(Sentence sentence, Question question, Token answer);

  /// Answer for (sentence, question id), if present.
  std::optional<Token> answer(const Sentence& sentence, const Token& question_id) const;

  const std::vector<QAEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::vector<QAEntry> entries_;
  std::map<std::pair<Sentence, Token>, std::size_t> index_;
};

/// Reads `question-id <TAB> sentence <TAB> answer` lines. `#` lines and blank
/// lines are skipped. Question kinds are inferred from the id split on `_`.
QATable parse_qa_table(std::string_view text);

std::string render_qa_table(const QATable& table);

}  // namespace qx
