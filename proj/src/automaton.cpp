#include "qx/automaton.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "lines.hpp"

namespace qx {

namespace {

std::set<StateId> mentioned_states(const std::vector<Rule>& rules, StateId initial,
                                   const std::set<StateId>& accepting) {
  std::set<StateId> states = accepting;
  states.insert(initial);
  for (const auto& r : rules) {
    states.insert(r.state);
    states.insert(r.next);
  }
  return states;
}

}  // namespace

MeaningAutomaton::MeaningAutomaton(std::set<StateId> states, std::vector<Rule> rules, StateId initial,
                                   std::set<StateId> accepting)
    : states_(std::move(states)), initial_(initial), accepting_(std::move(accepting)) {
  if (!states_.count(initial_)) {
    throw DanglingStateError("initial state " + std::to_string(initial_) + " is not a state of the machine");
  }
  for (StateId s : accepting_) {
    if (!states_.count(s)) {
      throw DanglingStateError("accepting state " + std::to_string(s) + " is not a state of the machine");
    }
  }
  for (auto& r : rules) {
    if (!states_.count(r.state) || !states_.count(r.next)) {
      throw DanglingStateError("rule " + std::to_string(r.state) + " " + r.input.str() + " refers to state " +
                               std::to_string(states_.count(r.state) ? r.next : r.state) +
                               " which is not a state of the machine");
    }
    auto [it, inserted] = transitions_[r.state].try_emplace(r.input, Transition{std::move(r.output), r.next});
    if (!inserted) {
      throw DeterminismError("two rules for state " + std::to_string(r.state) + " on input '" + r.input.str() +
                             "'");
    }
    ++rule_count_;
  }
}

MeaningAutomaton::MeaningAutomaton(std::vector<Rule> rules, StateId initial, std::set<StateId> accepting)
    : MeaningAutomaton(mentioned_states(rules, initial, accepting), rules, initial, accepting) {}

std::vector<Rule> MeaningAutomaton::rules() const {
  std::vector<Rule> out;
  out.reserve(rule_count_);
  for (const auto& [state, row] : transitions_) {
    for (const auto& [input, t] : row) out.push_back(Rule{state, input, t.output, t.next});
  }
  return out;
}

const MeaningAutomaton::Transition* MeaningAutomaton::transition(StateId state, const Token& input) const {
  auto row = transitions_.find(state);
  if (row == transitions_.end()) return nullptr;
  auto it = row->second.find(input);
  return it == row->second.end() ? nullptr : &it->second;
}

std::vector<std::pair<Token, MeaningAutomaton::Transition>> MeaningAutomaton::outgoing(StateId state) const {
  std::vector<std::pair<Token, Transition>> out;
  if (auto row = transitions_.find(state); row != transitions_.end()) out.assign(row->second.begin(), row->second.end());
  return out;
}

// ---------------------------------------------------------------------------
// File format

namespace {

StateId parse_state(std::string_view field, std::size_t line) {
  unsigned long long v = 0;
  if (!detail::parse_unsigned(field, v) || v > std::numeric_limits<StateId>::max()) {
    throw ParseError(line, "invalid state id '" + std::string(field) + "'");
  }
  return static_cast<StateId>(v);
}

Token parse_token(std::string_view field, std::size_t line) {
  if (!Token::is_valid(field)) throw ParseError(line, "invalid token '" + std::string(field) + "'");
  return Token{std::string(field)};
}

}  // namespace

MeaningAutomaton parse_automaton(std::string_view text) {
  std::optional<StateId> initial;
  std::set<StateId> accepting;
  std::vector<Rule> rules;
  std::map<std::pair<StateId, Token>, std::size_t> seen;

  for (const auto& line : detail::content_lines(text)) {
    auto fields = detail::split_on(line.text, ' ');
    for (auto f : fields) {
      if (f.empty()) throw ParseError(line.number, "fields must be separated by single spaces");
    }
    const std::string_view keyword = fields[0];
    if (keyword == "initial") {
      if (fields.size() != 2) throw ParseError(line.number, "expected 'initial <state>'");
      if (initial) throw ParseError(line.number, "duplicate 'initial' line");
      initial = parse_state(fields[1], line.number);
    } else if (keyword == "accept") {
      if (fields.size() < 2) throw ParseError(line.number, "expected 'accept <state> [<state>...]'");
      for (std::size_t i = 1; i < fields.size(); ++i) accepting.insert(parse_state(fields[i], line.number));
    } else if (keyword == "rule") {
      if (fields.size() != 5) throw ParseError(line.number, "expected 'rule <state> <input> <output> <next>'");
      Rule r{parse_state(fields[1], line.number), parse_token(fields[2], line.number), std::nullopt,
             parse_state(fields[4], line.number)};
      if (fields[3] != kEmptyOutput) r.output = parse_token(fields[3], line.number);
      auto [it, inserted] = seen.try_emplace({r.state, r.input}, line.number);
      if (!inserted) {
        throw DeterminismError("line " + std::to_string(line.number) + ": second rule for state " +
                               std::to_string(r.state) + " on input '" + r.input.str() + "' (first on line " +
                               std::to_string(it->second) + ")");
      }
      rules.push_back(std::move(r));
    } else {
      throw ParseError(line.number, "unknown directive '" + std::string(keyword) + "'");
    }
  }
  if (!initial) throw ParseError(0, "missing 'initial' line");
  return MeaningAutomaton(std::move(rules), *initial, std::move(accepting));
}

std::string render_automaton(const MeaningAutomaton& m) {
  std::ostringstream os;
  os << "initial " << m.initial() << '\n';
  if (!m.accepting().empty()) {
    os << "accept";
    for (StateId s : m.accepting()) os << ' ' << s;
    os << '\n';
  }
  for (const auto& r : m.rules()) {
    os << "rule " << r.state << ' ' << r.input << ' ' << (r.output ? r.output->str() : std::string(kEmptyOutput))
       << ' ' << r.next << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Execution

std::string_view to_string(RunFailure f) noexcept {
  switch (f) {
    case RunFailure::none: return "ok";
    case RunFailure::no_rule: return "no-rule";
    case RunFailure::non_accepting: return "non-accepting";
    case RunFailure::no_output: return "no-output";
  }
  return "ok";
}

std::string RunOutcome::describe() const {
  switch (failure) {
    case RunFailure::none: return answer ? answer->str() : std::string{};
    case RunFailure::no_rule:
      return "no rule for input '" + (stuck_on ? stuck_on->str() : std::string{}) + "' in state " +
             std::to_string(final_state);
    case RunFailure::non_accepting: return "halted in non-accepting state " + std::to_string(final_state);
    case RunFailure::no_output: return "accepted in state " + std::to_string(final_state) + " without output";
  }
  return {};
}

RunOutcome try_run(const MeaningAutomaton& m, const Sentence& input) {
  RunOutcome out;
  StateId state = m.initial();
  std::optional<Token> last;
  for (const auto& token : input) {
    const auto* t = m.transition(state, token);
    if (!t) {
      out.failure = RunFailure::no_rule;
      out.final_state = state;
      out.stuck_on = token;
      return out;
    }
    if (t->output) last = t->output;
    state = t->next;
  }
  out.final_state = state;
  if (!m.is_accepting(state)) {
    out.failure = RunFailure::non_accepting;
  } else if (!last) {
    out.failure = RunFailure::no_output;
  } else {
    out.answer = std::move(last);
  }
  return out;
}

Token run(const MeaningAutomaton& m, const Sentence& input) {
  if (input.empty()) throw std::invalid_argument("run: empty input");
  RunOutcome outcome = try_run(m, input);
  if (!outcome.ok()) throw RunError(std::move(outcome));
  return *outcome.answer;
}

Sentence encode_input(const Question& q, const Sentence& sentence) {
  if (sentence.empty()) throw std::invalid_argument("encode_input: empty sentence");
  if (q.id.str() == kSeparator) throw ReservedTokenError("question id is the reserved separator '##'");
  Sentence out;
  out.reserve(sentence.size() + 2);
  out.push_back(q.id);
  out.emplace_back(kSeparator);
  for (const auto& t : sentence) {
    if (t.str() == kSeparator) {
      throw ReservedTokenError("sentence '" + join_tokens(sentence) + "' contains the reserved separator '##'");
    }
    out.push_back(t);
  }
  return out;
}

std::vector<Mismatch> verify(const MeaningAutomaton& m, const QATable& table) {
  std::vector<Mismatch> out;
  for (const auto& e : table.entries()) {
    RunOutcome got;
    try {
      got = try_run(m, encode_input(e.question, e.sentence));
    } catch (const ReservedTokenError&) {
      // Such an entry cannot be encoded, so no machine answers it.
      got.failure = RunFailure::no_rule;
      got.stuck_on = Token{kSeparator};
    }
    if (!got.ok() || *got.answer != e.answer) out.push_back({e.sentence, e.question, e.answer, std::move(got)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Complexity

std::string_view to_string(AbstractionLevel level) noexcept {
  switch (level) {
    case AbstractionLevel::A_task: return "task";
    case AbstractionLevel::B_engine: return "engine";
    case AbstractionLevel::C_program: return "program";
    case AbstractionLevel::D_performance: return "performance";
  }
  return "task";
}

std::string_view level_letter(AbstractionLevel level) noexcept {
  switch (level) {
    case AbstractionLevel::A_task: return "A";
    case AbstractionLevel::B_engine: return "B";
    case AbstractionLevel::C_program: return "C";
    case AbstractionLevel::D_performance: return "D";
  }
  return "A";
}

std::optional<AbstractionLevel> parse_level(std::string_view letter) noexcept {
  if (letter == "A") return AbstractionLevel::A_task;
  if (letter == "B") return AbstractionLevel::B_engine;
  if (letter == "C") return AbstractionLevel::C_program;
  if (letter == "D") return AbstractionLevel::D_performance;
  return std::nullopt;
}

std::set<Token> symbols(const MeaningAutomaton& m) {
  std::set<Token> out;
  for (const auto& r : m.rules()) {
    out.insert(r.input);
    if (r.output) out.insert(*r.output);
  }
  return out;
}

namespace {

ComplexityReport measure(const MeaningAutomaton& m, AbstractionLevel level) {
  ComplexityReport r;
  r.state_count = m.states().size();
  r.symbol_count = symbols(m).size();
  r.state_symbol = r.state_count * r.symbol_count;
  r.rule_count = m.rule_count();
  r.t_rule = 4 * r.rule_count;
  r.level = level;
  return r;
}

}  // namespace

ComplexityReport state_symbol_complexity(const MeaningAutomaton& m, AbstractionLevel level) {
  return measure(m, level);
}

ComplexityReport t_rule_complexity(const MeaningAutomaton& m, AbstractionLevel level) { return measure(m, level); }

MeaningAutomaton build_what_machine(const std::map<Token, Token>& definitions) {
  if (definitions.empty()) throw std::invalid_argument("build_what_machine: no definitions");
  std::vector<Rule> rules;
  rules.reserve(definitions.size());
  for (const auto& [u, def] : definitions) rules.push_back(Rule{kWhatInitial, u, def, kWhatAccept});
  return MeaningAutomaton({kWhatInitial, kWhatAccept}, std::move(rules), kWhatInitial, {kWhatAccept});
}

}  // namespace qx
