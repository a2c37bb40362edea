#include "qx/semantics.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <stdexcept>
#include <string>

#include "lines.hpp"

namespace qx {

SemanticsSet semantics_of(const QATable& table, const Sentence& sentence) {
  SemanticsSet out{sentence, {}};
  for (const auto& e : table.entries()) {
    if (e.sentence == sentence) out.pairs.emplace_back(e.question.id, e.answer);
  }
  if (out.pairs.empty()) throw UnknownSentenceError("sentence '" + join_tokens(sentence) + "' is not in the table");
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

namespace {

constexpr std::array<std::string_view, 7> kWhWords = {"what", "who", "when", "where", "why", "how", "which"};
constexpr std::array<std::string_view, 9> kAuxiliaries = {"is",   "are", "do",   "does", "can",
                                                          "did", "will", "have", "has"};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

template <std::size_t N>
bool is_one_of(const std::string& word, const std::array<std::string_view, N>& set) {
  return std::find(set.begin(), set.end(), word) != set.end();
}

}  // namespace

QuestionKind classify_question(const Sentence& text) {
  if (text.empty()) throw std::invalid_argument("classify_question: empty question");
  for (const auto& t : text) {
    if (lower(t.view()) == "or") return QuestionKind::alternative;
  }
  const std::string first = lower(text.front().view());
  if (is_one_of(first, kWhWords)) return QuestionKind::wh;
  if (is_one_of(first, kAuxiliaries)) return QuestionKind::yes_no;
  return QuestionKind::wh;
}

// ---------------------------------------------------------------------------

void AnswerLinkGraph::add_node(const Token& item) { adjacency_.try_emplace(item); }

void AnswerLinkGraph::add_edge(const Token& from, const Token& to) {
  add_node(from);
  add_node(to);
  if (edges_.emplace(from, to).second) adjacency_[from].push_back(to);
}

std::size_t AnswerLinkGraph::max_out_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& [item, succ] : adjacency_) best = std::max(best, succ.size());
  return best;
}

const std::vector<Token>& AnswerLinkGraph::successors(const Token& item) const {
  auto it = adjacency_.find(item);
  if (it == adjacency_.end()) throw UnknownItemError("item '" + item.str() + "' is not in the graph");
  return it->second;
}

std::vector<Token> AnswerLinkGraph::nodes() const {
  std::vector<Token> out;
  out.reserve(adjacency_.size());
  for (const auto& [item, succ] : adjacency_) out.push_back(item);
  return out;
}

std::uint64_t iterated_what(const AnswerLinkGraph& graph, const std::set<Token>& initial, std::uint64_t rounds) {
  for (const auto& item : initial) {
    if (!graph.contains(item)) throw UnknownItemError("initial item '" + item.str() + "' is not in the graph");
  }
  std::set<Token> seen(initial);
  std::vector<Token> frontier(initial.begin(), initial.end());
  for (std::uint64_t round = 0; round < rounds && !frontier.empty(); ++round) {
    std::vector<Token> next;
    for (const auto& item : frontier) {
      for (const auto& linked : graph.successors(item)) {
        if (seen.insert(linked).second) next.push_back(linked);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

SaturatingCount iterated_estimate(std::uint64_t items, std::uint64_t links_per_answer, std::uint64_t rounds) {
  if (items == 0) throw std::invalid_argument("iterated_estimate: items must be at least 1");
  SaturatingCount sum{1, false};
  SaturatingCount power{1, false};
  for (std::uint64_t i = 1; i <= rounds; ++i) {
    power = power * SaturatingCount{links_per_answer, false};
    sum = sum + power;
    if (sum.saturated) break;
    // With L <= 1 the sum grows by at most 1 per round; no need to loop on.
    if (links_per_answer <= 1) {
      sum = sum + SaturatingCount{(rounds - i) * links_per_answer, false};
      break;
    }
  }
  return SaturatingCount{items, false} * sum;
}

AnswerLinkGraph parse_link_graph(std::string_view text) {
  AnswerLinkGraph graph;
  for (const auto& line : detail::content_lines(text)) {
    auto fields = detail::split_on(line.text, '\t');
    if (fields.size() != 2) {
      throw ParseError(line.number, "expected 2 tab-separated fields, found " + std::to_string(fields.size()));
    }
    auto a = detail::trim(fields[0]);
    auto b = detail::trim(fields[1]);
    if (!Token::is_valid(a) || !Token::is_valid(b)) throw ParseError(line.number, "invalid item token");
    if (a == "node") {
      graph.add_node(Token{std::string(b)});
    } else {
      graph.add_edge(Token{std::string(a)}, Token{std::string(b)});
    }
  }
  return graph;
}

std::set<Token> parse_item_set(std::string_view text) {
  std::set<Token> out;
  for (const auto& line : detail::content_lines(text)) {
    auto item = detail::trim(line.text);
    if (!Token::is_valid(item)) throw ParseError(line.number, "invalid item '" + std::string(item) + "'");
    out.emplace(std::string(item));
  }
  return out;
}

}  // namespace qx
