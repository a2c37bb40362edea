#include "qx/qa_table.hpp"

#include "lines.hpp"
#include "qx/semantics.hpp"

namespace qx {

std::string_view to_string(QuestionKind kind) noexcept {
  switch (kind) {
    case QuestionKind::yes_no: return "yes_no";
    case QuestionKind::wh: return "wh";
    case QuestionKind::alternative: return "alternative";
  }
  return "wh";
}

void QATable::add(Sentence sentence, Question question, Token answer) {
  if (sentence.empty()) throw Error("table entry has an empty sentence");
  auto key = std::make_pair(sentence, question.id);
  if (auto it = index_.find(key); it != index_.end()) {
    const QAEntry& existing = entries_[it->second];
    if (existing.answer != answer) {
      throw FunctionalityError("conflicting answers for question '" + question.id.str() + "' on sentence '" +
                               join_tokens(sentence) + "': '" + existing.answer.str() + "' vs '" + answer.str() +
                               "'");
    }
    return;
  }
  index_.emplace(std::move(key), entries_.size());
  entries_.push_back({std::move(sentence), std::move(question), std::move(answer)});
}

std::optional<Token> QATable::answer(const Sentence& sentence, const Token& question_id) const {
  auto it = index_.find(std::make_pair(sentence, question_id));
  if (it == index_.end()) return std::nullopt;
  return entries_[it->second].answer;
}

namespace {

QuestionKind kind_from_id(const Token& id) {
  Sentence words;
  for (auto piece : detail::split_on(id.view(), '_')) {
    if (Token::is_valid(piece)) words.emplace_back(std::string(piece));
  }
  if (words.empty()) return QuestionKind::wh;
  return classify_question(words);
}

}  // namespace

QATable parse_qa_table(std::string_view text) {
  QATable table;
  for (const auto& line : detail::content_lines(text)) {
    auto fields = detail::split_on(line.text, '\t');
    if (fields.size() != 3) {
      throw ParseError(line.number, "expected 3 tab-separated fields, found " + std::to_string(fields.size()));
    }
    try {
      Token qid{std::string(detail::trim(fields[0]))};
      Sentence sentence = split_tokens(fields[1]);
      if (sentence.empty()) throw ParseError(line.number, "empty sentence");
      Token answer{std::string(detail::trim(fields[2]))};
      QuestionKind kind = kind_from_id(qid);
      table.add(std::move(sentence), Question{std::move(qid), kind}, std::move(answer));
    } catch (const ParseError&) {
      throw;
    } catch (const FunctionalityError& e) {
      throw FunctionalityError("line " + std::to_string(line.number) + ": " + e.what());
    } catch (const Error& e) {
      throw ParseError(line.number, e.what());
    }
  }
  return table;
}

std::string render_qa_table(const QATable& table) {
  std::string out;
  for (const auto& e : table.entries()) {
    out += e.question.id.str();
    out += '\t';
    out += join_tokens(e.sentence);
    out += '\t';
    out += e.answer.str();
    out += '\n';
  }
  return out;
}

}  // namespace qx
