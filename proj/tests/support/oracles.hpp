#pragma once

// Test-only reference implementations. None of these call into the code
// paths they are used to check.

#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qx/automaton.hpp"
#include "qx/qa_table.hpp"

namespace qx::testing {

// ---------------------------------------------------------------------------
// Transducer equivalence by breadth-first search over state pairs.

/// True when some input suffix tells state `p` of `a` apart from state `q` of
/// `b`: acceptance differs, a symbol is defined in one and not the other, or
/// the same symbol emits different outputs.
inline bool distinguishable(const MeaningAutomaton& a, StateId p, const MeaningAutomaton& b, StateId q) {
  std::set<std::pair<StateId, StateId>> seen{{p, q}};
  std::deque<std::pair<StateId, StateId>> queue{{p, q}};
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    if (a.is_accepting(x) != b.is_accepting(y)) return true;
    std::set<Token> inputs;
    for (const auto& r : a.rules()) {
      if (r.state == x) inputs.insert(r.input);
    }
    for (const auto& r : b.rules()) {
      if (r.state == y) inputs.insert(r.input);
    }
    for (const auto& in : inputs) {
      const auto* tx = a.transition(x, in);
      const auto* ty = b.transition(y, in);
      if (!tx || !ty) return true;
      if (tx->output != ty->output) return true;
      if (seen.insert({tx->next, ty->next}).second) queue.emplace_back(tx->next, ty->next);
    }
  }
  return false;
}

inline bool equivalent_machines(const MeaningAutomaton& a, const MeaningAutomaton& b) {
  return !distinguishable(a, a.initial(), b, b.initial());
}

inline std::vector<StateId> reachable_states(const MeaningAutomaton& m) {
  std::vector<StateId> out{m.initial()};
  std::set<StateId> seen{m.initial()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& r : m.rules()) {
      if (r.state == out[i] && seen.insert(r.next).second) out.push_back(r.next);
    }
  }
  return out;
}

/// Number of behaviour classes among reachable states, from pairwise checks.
inline std::size_t oracle_minimal_state_count(const MeaningAutomaton& m) {
  auto states = reachable_states(m);
  std::vector<StateId> representatives;
  for (StateId s : states) {
    bool merged = false;
    for (StateId r : representatives) {
      if (!distinguishable(m, s, m, r)) {
        merged = true;
        break;
      }
    }
    if (!merged) representatives.push_back(s);
  }
  return representatives.size();
}

// ---------------------------------------------------------------------------
// Reachability by plain breadth-first search over a raw edge list.

using EdgeList = std::vector<std::pair<std::string, std::string>>;

inline std::size_t oracle_reach(const EdgeList& edges, const std::set<std::string>& initial, std::uint64_t hops) {
  std::map<std::string, std::uint64_t> depth;
  std::deque<std::string> queue;
  for (const auto& i : initial) {
    depth[i] = 0;
    queue.push_back(i);
  }
  while (!queue.empty()) {
    std::string item = queue.front();
    queue.pop_front();
    if (depth[item] == hops) continue;
    for (const auto& [from, to] : edges) {
      if (from == item && !depth.count(to)) {
        depth[to] = depth[item] + 1;
        queue.push_back(to);
      }
    }
  }
  return depth.size();
}

// ---------------------------------------------------------------------------

/// Generalised harmonic number sum_{r=1..n} r^-s, summed from the largest
/// term down.
inline double harmonic(std::uint64_t n, double s = 1.0) {
  double sum = 0.0;
  for (std::uint64_t r = 1; r <= n; ++r) sum += 1.0 / std::pow(static_cast<double>(r), s);
  return sum;
}

// ---------------------------------------------------------------------------
// Random instances.

inline Token tok(const std::string& s) { return Token{s}; }

/// Up to `max_entries` entries over a small vocabulary so that paths share
/// prefixes and suffixes often.
inline QATable random_table(std::mt19937& rng, int max_entries = 8, int max_len = 4) {
  static const std::vector<std::string> questions = {"what_is", "is_it", "who"};
  static const std::vector<std::string> words = {"a", "b", "c"};
  static const std::vector<std::string> answers = {"yes", "no", "x"};
  std::uniform_int_distribution<int> n_entries(1, max_entries);
  std::uniform_int_distribution<int> length(1, max_len);
  auto pick = [&](const std::vector<std::string>& from) {
    return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
  };
  QATable table;
  const int n = n_entries(rng);
  for (int i = 0; i < n; ++i) {
    Sentence s;
    const int len = length(rng);
    for (int j = 0; j < len; ++j) s.push_back(tok(pick(words)));
    Question q{tok(pick(questions)), QuestionKind::wh};
    if (table.answer(s, q.id)) continue;
    table.add(std::move(s), std::move(q), tok(pick(answers)));
  }
  return table;
}

/// A random deterministic machine with 1..max_states states over inputs
/// {a, b, c} and outputs {x, y, none}. Some states may be unreachable.
inline MeaningAutomaton random_machine(std::mt19937& rng, StateId max_states = 8) {
  const StateId n = std::uniform_int_distribution<StateId>(1, max_states)(rng);
  std::bernoulli_distribution has_rule(0.7), accepting(0.4);
  std::uniform_int_distribution<StateId> target(0, n - 1);
  std::uniform_int_distribution<int> output(0, 2);
  std::set<StateId> states, accept;
  std::vector<Rule> rules;
  for (StateId s = 0; s < n; ++s) {
    states.insert(s);
    if (accepting(rng)) accept.insert(s);
    for (const char* in : {"a", "b", "c"}) {
      if (!has_rule(rng)) continue;
      const int o = output(rng);
      std::optional<Token> out;
      if (o == 1) out = tok("x");
      if (o == 2) out = tok("y");
      rules.push_back(Rule{s, tok(in), out, target(rng)});
    }
  }
  return MeaningAutomaton(std::move(states), std::move(rules), 0, std::move(accept));
}

}  // namespace qx::testing
