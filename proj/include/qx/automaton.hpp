#pragma once

// Meaning automata: deterministic finite-state transducers over tokens that
// map an encoded (question, sentence) pair to an answer token.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qx/qa_table.hpp"
#include "qx/token.hpp"

namespace qx {

using StateId = std::uint32_t;

/// Separator placed between the question id and the sentence.
inline const std::string kSeparator{kReservedSeparator};

/// Printable placeholder for "no output" in automaton files.
inline constexpr std::string_view kEmptyOutput = "-";

/// One row of the four-column table: (state, input, output, next).
struct Rule {
  StateId state = 0;
  Token input;
  std::optional<Token> output;
  StateId next = 0;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Raised when automaton invariants are violated on construction.
class AutomatonError : public Error {
 public:
  using Error::Error;
};

class DeterminismError : public AutomatonError {
 public:
  using AutomatonError::AutomatonError;
};

class DanglingStateError : public AutomatonError {
 public:
  using AutomatonError::AutomatonError;
};

class MeaningAutomaton {
 public:
  struct Transition {
    std::optional<Token> output;
    StateId next;

    friend bool operator==(const Transition&, const Transition&) = default;
  };

  /// Validates: initial and accepting states belong to `states`, every rule
  /// endpoint belongs to `states`, and no two rules share (state, input).
  MeaningAutomaton(std::set<StateId> states, std::vector<Rule> rules, StateId initial,
                   std::set<StateId> accepting);

  /// Same, with `states` taken as every state mentioned anywhere.
  MeaningAutomaton(std::vector<Rule> rules, StateId initial, std::set<StateId> accepting);

  const std::set<StateId>& states() const noexcept { return states_; }
  const std::set<StateId>& accepting() const noexcept { return accepting_; }
  StateId initial() const noexcept { return initial_; }
  bool is_accepting(StateId s) const { return accepting_.count(s) != 0; }

  /// Rules ordered by (state, input).
  std::vector<Rule> rules() const;
  std::size_t rule_count() const noexcept { return rule_count_; }

  const Transition* transition(StateId state, const Token& input) const;

  /// Outgoing transitions of `state`, ordered by input token.
  std::vector<std::pair<Token, Transition>> outgoing(StateId state) const;

  friend bool operator==(const MeaningAutomaton&, const MeaningAutomaton&) = default;

 private:
  std::set<StateId> states_;
  std::map<StateId, std::map<Token, Transition>> transitions_;
  std::size_t rule_count_ = 0;
  StateId initial_;
  std::set<StateId> accepting_;
};

/// Reads the line-oriented automaton format:
///   # comment
///   initial <state>
///   accept <state> [<state>...]
///   rule <state> <input> <output-or-dash> <next>
/// Fields are separated by single spaces.
MeaningAutomaton parse_automaton(std::string_view text);

/// Writes the format read by parse_automaton; rules in (state, input) order.
std::string render_automaton(const MeaningAutomaton& m);

// ---------------------------------------------------------------------------
// Execution

enum class RunFailure { none, no_rule, non_accepting, no_output };

std::string_view to_string(RunFailure f) noexcept;

struct RunOutcome {
  std::optional<Token> answer;
  RunFailure failure = RunFailure::none;
  StateId final_state = 0;
  /// Token without a matching rule, for RunFailure::no_rule.
  std::optional<Token> stuck_on;

  bool ok() const noexcept { return failure == RunFailure::none; }
  std::string describe() const;
};

class RunError : public Error {
 public:
  explicit RunError(RunOutcome outcome) : Error(outcome.describe()), outcome_(std::move(outcome)) {}
  const RunOutcome& outcome() const noexcept { return outcome_; }

 private:
  RunOutcome outcome_;
};

/// Runs without throwing; failures come back in the outcome.
RunOutcome try_run(const MeaningAutomaton& m, const Sentence& input);

/// Consumes `input` from the initial state and returns the last non-empty
/// output, provided the run ends in an accepting state.
/// Throws RunError on an uncovered token, a non-accepting halt, or when no
/// output was emitted. Throws std::invalid_argument on empty input.
Token run(const MeaningAutomaton& m, const Sentence& input);

class ReservedTokenError : public Error {
 public:
  using Error::Error;
};

/// [question id, ##, sentence...]
Sentence encode_input(const Question& q, const Sentence& sentence);

struct Mismatch {
  Sentence sentence;
  Question question;
  Token expected;
  RunOutcome got;
};

/// Every table entry whose encoded input the machine does not answer with the
/// table's answer. Empty means `m` is a meaning automaton for `table`.
std::vector<Mismatch> verify(const MeaningAutomaton& m, const QATable& table);

// ---------------------------------------------------------------------------
// Complexity measures

enum class AbstractionLevel { A_task, B_engine, C_program, D_performance };

std::string_view to_string(AbstractionLevel level) noexcept;
std::string_view level_letter(AbstractionLevel level) noexcept;
std::optional<AbstractionLevel> parse_level(std::string_view letter) noexcept;

struct ComplexityReport {
  std::uint64_t state_count = 0;
  std::uint64_t symbol_count = 0;
  std::uint64_t state_symbol = 0;
  std::uint64_t rule_count = 0;
  std::uint64_t t_rule = 0;
  AbstractionLevel level = AbstractionLevel::A_task;
};

/// Distinct tokens over rule inputs and outputs; the empty marker is not a
/// symbol, the separator is when it occurs in a rule.
std::set<Token> symbols(const MeaningAutomaton& m);

// Both measures fill the whole report; they differ only in name so call
// sites read like the measure they care about.
ComplexityReport state_symbol_complexity(const MeaningAutomaton& m,
                                         AbstractionLevel level = AbstractionLevel::A_task);
ComplexityReport t_rule_complexity(const MeaningAutomaton& m, AbstractionLevel level = AbstractionLevel::A_task);

inline constexpr StateId kWhatInitial = 1;
inline constexpr StateId kWhatAccept = 2;

/// One rule (1, u, def_u, acc) per definition. Throws std::invalid_argument
/// on an empty map.
MeaningAutomaton build_what_machine(const std::map<Token, Token>& definitions);

}  // namespace qx
