#pragma once

// Back-of-envelope complexity estimates for a new language-processing task,
// computed from a declarative profile. All arithmetic is exact unsigned
// integer arithmetic that saturates (and says so) instead of wrapping.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qx/qa_table.hpp"
#include "qx/saturating.hpp"
#include "qx/token.hpp"

namespace qx {

inline constexpr std::uint64_t kMaxActionParams = 16;
/// A domain is small below this many concepts.
inline constexpr std::uint64_t kSmallDomainConcepts = 300;
/// Knowledge bases of this many facts sit at the practical expert-system limit.
inline constexpr std::uint64_t kExpertSystemFactLimit = 3000;
inline constexpr std::uint64_t kManageableFacts = 1000;

class ActionSpec {
 public:
  /// Throws std::invalid_argument when param_count exceeds kMaxActionParams.
  ActionSpec(Token name, std::uint64_t param_count);

  const Token& name() const noexcept { return name_; }
  std::uint64_t param_count() const noexcept { return param_count_; }

 private:
  Token name_;
  std::uint64_t param_count_;
};

/// Optional grammar-size inputs; used only when all three are supplied.
struct ConstructionSpec {
  std::uint64_t universe = 0;
  double target = 0.0;
  double exponent = 1.0;
};

struct TaskProfile {
  std::uint64_t concepts = 0;
  std::uint64_t vocab = 0;
  std::vector<ActionSpec> actions;
  std::uint64_t dialog_rounds = 0;
  std::uint64_t facts_per_concept = 10;
  std::uint64_t facts_per_token = 10;
  std::uint64_t growth_low = 2;
  std::uint64_t growth_high = 5;
  // Dialog-control shape: main states and average substates per main state.
  std::uint64_t main_states_low = 7;
  std::uint64_t main_states_high = 9;
  std::uint64_t substates = 10;
  std::optional<ConstructionSpec> constructions;
};

enum class DomainClass { small, large };

std::string_view to_string(DomainClass c) noexcept;

struct CountRange {
  SaturatingCount low;
  SaturatingCount high;
};

struct EstimateReport {
  SaturatingCount kb_facts;
  DomainClass domain_class = DomainClass::small;
  SaturatingCount situation_bound;
  CountRange dialog_states;
  CountRange narrative_range;
  std::optional<std::uint64_t> grammar_constructions;
  std::vector<std::string> notes;
};

SaturatingCount estimate_kb_facts(const TaskProfile& p);

DomainClass classify_domain(const TaskProfile& p);

/// Sum over actions of 2^(parameter count).
SaturatingCount situation_bound(const std::vector<ActionSpec>& actions);

/// (main_states_low * substates, main_states_high * substates)
CountRange estimate_dialog_states(const TaskProfile& p);

/// vocab * facts_per_token * growth^rounds, for growth_low and growth_high.
/// A reconstruction that reproduces the 10^5..10^7 band for a 350-word
/// narrative domain over 5 rounds with growth 2..5.
CountRange narrative_estimate(const TaskProfile& p);

EstimateReport full_report(const TaskProfile& p);

/// `key = value` lines and `action <name> <param_count>` lines; `#` comments.
/// Throws ParseError.
TaskProfile parse_profile(std::string_view text);

}  // namespace qx
