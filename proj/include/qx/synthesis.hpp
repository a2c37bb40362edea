#pragma once

// Building meaning automata from question-answer tables.

#include <cstddef>

#include "qx/automaton.hpp"
#include "qx/qa_table.hpp"

namespace qx {

/// Trie over the encoded inputs of a table. The answer is emitted on the last
/// transition of each path and the state it leads to is accepting. States are
/// numbered breadth-first from the root, which is 0.
/// Throws std::invalid_argument on an empty table and ReservedTokenError when
/// a sentence contains the separator.
MeaningAutomaton build_prefix_machine(const QATable& table);

/// Minimal deterministic transducer equivalent to `m`.
///
/// Two states are equivalent when every input suffix gives them the same
/// behaviour: the same sequence of outputs, the same acceptance at the end,
/// and the same set of defined transitions along the way. Unreachable states
/// are dropped. The result is renumbered breadth-first from the initial state
/// (inputs visited in token order), so minimize(minimize(m)) == minimize(m).
MeaningAutomaton minimize(const MeaningAutomaton& m);

struct QComplexityResult {
  MeaningAutomaton machine;
  ComplexityReport report;
  /// Measures of the unminimized prefix machine, for before/after reporting.
  ComplexityReport prefix_report;
  std::size_t table_size = 0;
  /// Always true: the machine is the smallest one this construction finds
  /// under a fixed encoding, which bounds the true minimum from above.
  bool upper_bound = true;
};

QComplexityResult q_complexity(const QATable& table, AbstractionLevel level = AbstractionLevel::A_task);

}  // namespace qx
