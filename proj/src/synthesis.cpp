#include "qx/synthesis.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace qx {

namespace {

// Breadth-first renumbering from `initial`, visiting inputs in token order.
// `Outgoing` returns the ordered (input, Transition) list for a state id of
// the source machine; `Accepting` tells whether a source state accepts.
template <class Outgoing, class Accepting>
MeaningAutomaton renumber_breadth_first(StateId initial, Outgoing outgoing, Accepting accepting) {
  std::unordered_map<StateId, StateId> fresh;
  std::deque<StateId> queue;
  std::vector<Rule> rules;
  std::set<StateId> states;
  std::set<StateId> accept;

  fresh.emplace(initial, 0);
  queue.push_back(initial);
  while (!queue.empty()) {
    StateId old = queue.front();
    queue.pop_front();
    StateId id = fresh.at(old);
    states.insert(id);
    if (accepting(old)) accept.insert(id);
    for (const auto& [input, t] : outgoing(old)) {
      auto [it, inserted] = fresh.emplace(t.next, static_cast<StateId>(fresh.size()));
      if (inserted) queue.push_back(t.next);
      rules.push_back(Rule{id, input, t.output, it->second});
    }
  }
  return MeaningAutomaton(std::move(states), std::move(rules), 0, std::move(accept));
}

struct TrieNode {
  std::map<Token, std::pair<std::optional<Token>, std::size_t>> children;
  bool accepting = false;
};

}  // namespace

MeaningAutomaton build_prefix_machine(const QATable& table) {
  if (table.empty()) throw std::invalid_argument("build_prefix_machine: empty table");
  std::vector<TrieNode> nodes(1);
  for (const auto& e : table.entries()) {
    Sentence input = encode_input(e.question, e.sentence);
    std::size_t at = 0;
    for (std::size_t i = 0; i < input.size(); ++i) {
      auto it = nodes[at].children.find(input[i]);
      if (it == nodes[at].children.end()) {
        it = nodes[at].children.emplace(input[i], std::make_pair(std::nullopt, nodes.size())).first;
        nodes.emplace_back();
      }
      // Entries are unique per encoded input, so each edge is the last edge
      // of at most one entry and never receives two different answers.
      if (i + 1 == input.size()) it->second.first = e.answer;
      at = it->second.second;
    }
    nodes[at].accepting = true;
  }

  auto outgoing = [&](StateId s) {
    std::vector<std::pair<Token, MeaningAutomaton::Transition>> out;
    for (const auto& [input, edge] : nodes[s].children) {
      out.emplace_back(input, MeaningAutomaton::Transition{edge.first, static_cast<StateId>(edge.second)});
    }
    return out;
  };
  return renumber_breadth_first(0, outgoing, [&](StateId s) { return nodes[s].accepting; });
}

MeaningAutomaton minimize(const MeaningAutomaton& m) {
  // Reachable states, indexed densely in breadth-first order.
  std::vector<StateId> order;
  std::unordered_map<StateId, std::size_t> index;
  order.push_back(m.initial());
  index.emplace(m.initial(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& [input, t] : m.outgoing(order[i])) {
      if (index.emplace(t.next, order.size()).second) order.push_back(t.next);
    }
  }
  const std::size_t n = order.size();

  struct Edge {
    Token input;
    std::optional<Token> output;
    std::size_t target;
  };
  std::vector<std::vector<Edge>> edges(n);
  std::vector<bool> accepting(n);
  for (std::size_t i = 0; i < n; ++i) {
    accepting[i] = m.is_accepting(order[i]);
    for (const auto& [input, t] : m.outgoing(order[i])) edges[i].push_back({input, t.output, index.at(t.next)});
  }

  // Initial partition: acceptance plus the (input, output) labels leaving the
  // state. Two states in one block then agree on every one-symbol suffix.
  using Label = std::pair<Token, std::optional<Token>>;
  std::vector<std::size_t> block(n);
  {
    std::map<std::pair<bool, std::vector<Label>>, std::size_t> ids;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Label> labels;
      for (const auto& e : edges[i]) labels.emplace_back(e.input, e.output);
      block[i] = ids.emplace(std::make_pair(accepting[i], std::move(labels)), ids.size()).first->second;
    }
  }

  // Refine by successor blocks until the number of blocks stops growing.
  std::size_t block_count = 0;
  for (std::size_t b : block) block_count = std::max(block_count, b + 1);
  while (true) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> ids;
    std::vector<std::size_t> refined(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> successors;
      successors.reserve(edges[i].size());
      for (const auto& e : edges[i]) successors.push_back(block[e.target]);
      refined[i] = ids.emplace(std::make_pair(block[i], std::move(successors)), ids.size()).first->second;
    }
    const std::size_t refined_count = ids.size();
    block = std::move(refined);
    if (refined_count == block_count) break;
    block_count = refined_count;
  }

  // Any member represents its block; states in one block have identical
  // labels and successor blocks.
  std::vector<std::size_t> representative(block_count, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (representative[block[i]] == n) representative[block[i]] = i;
  }
  auto outgoing = [&](StateId b) {
    std::vector<std::pair<Token, MeaningAutomaton::Transition>> out;
    for (const auto& e : edges[representative[b]]) {
      out.emplace_back(e.input, MeaningAutomaton::Transition{e.output, static_cast<StateId>(block[e.target])});
    }
    return out;
  };
  return renumber_breadth_first(static_cast<StateId>(block[0]), outgoing,
                                [&](StateId b) { return accepting[representative[b]]; });
}

QComplexityResult q_complexity(const QATable& table, AbstractionLevel level) {
  MeaningAutomaton prefix = build_prefix_machine(table);
  ComplexityReport prefix_report = state_symbol_complexity(prefix, level);
  MeaningAutomaton minimal = minimize(prefix);
  ComplexityReport report = state_symbol_complexity(minimal, level);
  return QComplexityResult{std::move(minimal), report, prefix_report, table.size(), true};
}

}  // namespace qx
