#pragma once

// Q-semantics of sentences, question classification, and iterated
// what-complexity over answer-link graphs.

#include <cstdint>
#include <map>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "qx/qa_table.hpp"
#include "qx/saturating.hpp"
#include "qx/token.hpp"

namespace qx {

/// ||s||: every (question id, answer) pair the table holds for one sentence,
/// ordered by question id.
struct SemanticsSet {
  Sentence sentence;
  std::vector<std::pair<Token, Token>> pairs;
};

class UnknownSentenceError : public Error {
 public:
  using Error::Error;
};

SemanticsSet semantics_of(const QATable& table, const Sentence& sentence);

/// Heuristic question typing. Checked in order: an `or` anywhere makes an
/// alternative question; a leading what/who/when/where/why/how/which makes a
/// wh-question; a leading auxiliary (is, are, do, does, can, did, will, have,
/// has) makes a yes/no question; anything else is treated as wh.
/// Matching ignores ASCII case. Throws std::invalid_argument on empty input.
QuestionKind classify_question(const Sentence& text);

/// Directed graph of askable items; an edge a -> b means the answer about a
/// mentions b. Adding an edge adds both endpoints as nodes.
class AnswerLinkGraph {
 public:
  void add_node(const Token& item);
  void add_edge(const Token& from, const Token& to);

  bool contains(const Token& item) const { return adjacency_.count(item) != 0; }
  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t max_out_degree() const noexcept;

  /// Successors in insertion order, without duplicates.
  const std::vector<Token>& successors(const Token& item) const;
  std::vector<Token> nodes() const;

 private:
  std::map<Token, std::vector<Token>> adjacency_;
  std::set<std::pair<Token, Token>> edges_;
};

class UnknownItemError : public Error {
 public:
  using Error::Error;
};

/// Number of distinct items reachable from `initial` in at most `rounds`
/// hops, the initial items included.
std::uint64_t iterated_what(const AnswerLinkGraph& graph, const std::set<Token>& initial, std::uint64_t rounds);

/// items * (1 + L + L^2 + ... + L^rounds), saturating at UINT64_MAX.
/// Throws std::invalid_argument when items is 0.
SaturatingCount iterated_estimate(std::uint64_t items, std::uint64_t links_per_answer, std::uint64_t rounds);

/// Edge list: `from <TAB> to` lines, plus `node <TAB> item` for isolated nodes.
AnswerLinkGraph parse_link_graph(std::string_view text);

/// One item per line.
std::set<Token> parse_item_set(std::string_view text);

}  // namespace qx
