#include "qx/estimator.hpp"

#include <cstdlib>
#include <stdexcept>

#include "lines.hpp"
#include "qx/zipf.hpp"

namespace qx {

ActionSpec::ActionSpec(Token name, std::uint64_t param_count) : name_(std::move(name)), param_count_(param_count) {
  if (param_count_ > kMaxActionParams) {
    throw std::invalid_argument("action '" + name_.str() + "' has " + std::to_string(param_count_) +
                                " parameters; at most " + std::to_string(kMaxActionParams) + " are supported");
  }
}

std::string_view to_string(DomainClass c) noexcept { return c == DomainClass::small ? "small" : "large"; }

SaturatingCount estimate_kb_facts(const TaskProfile& p) {
  return SaturatingCount{p.concepts, false} * SaturatingCount{p.facts_per_concept, false};
}

DomainClass classify_domain(const TaskProfile& p) {
  return p.concepts < kSmallDomainConcepts ? DomainClass::small : DomainClass::large;
}

SaturatingCount situation_bound(const std::vector<ActionSpec>& actions) {
  SaturatingCount sum;
  for (const auto& a : actions) {
    if (a.param_count() > kMaxActionParams) throw std::invalid_argument("situation_bound: too many parameters");
    sum = sum + SaturatingCount{std::uint64_t{1} << a.param_count(), false};
  }
  return sum;
}

CountRange estimate_dialog_states(const TaskProfile& p) {
  const SaturatingCount sub{p.substates, false};
  return {SaturatingCount{p.main_states_low, false} * sub, SaturatingCount{p.main_states_high, false} * sub};
}

CountRange narrative_estimate(const TaskProfile& p) {
  const SaturatingCount base = SaturatingCount{p.vocab, false} * SaturatingCount{p.facts_per_token, false};
  return {base * saturating_pow(p.growth_low, p.dialog_rounds), base * saturating_pow(p.growth_high, p.dialog_rounds)};
}

EstimateReport full_report(const TaskProfile& p) {
  EstimateReport r;
  r.kb_facts = estimate_kb_facts(p);
  r.domain_class = classify_domain(p);
  r.situation_bound = situation_bound(p.actions);
  r.dialog_states = estimate_dialog_states(p);
  r.narrative_range = narrative_estimate(p);

  if (r.domain_class == DomainClass::small) {
    r.notes.push_back("small domain: fewer than " + std::to_string(kSmallDomainConcepts) + " concepts");
  } else {
    r.notes.push_back("not a small domain: " + std::to_string(kSmallDomainConcepts) + " or more concepts");
  }
  if (r.kb_facts.value >= kExpertSystemFactLimit) {
    r.notes.push_back("knowledge base at or beyond the expert-system limit of " +
                      std::to_string(kExpertSystemFactLimit) + " facts");
  } else if (r.kb_facts.value < kManageableFacts) {
    r.notes.push_back("knowledge base under " + std::to_string(kManageableFacts) + " facts: manageable");
  }
  r.notes.push_back("narrative range is a reconstruction: vocab x facts_per_token x growth^rounds");
  if (r.narrative_range.high.value >= 100000) {
    r.notes.push_back("narrative range reaches open-domain scale (10^5 facts or more)");
  }

  if (p.constructions && p.constructions->universe > 0) {
    const auto& c = *p.constructions;
    r.grammar_constructions = estimate_constructions(c.universe, c.target, c.exponent);
    r.notes.push_back("grammar estimate assumes an idealised rank^-s construction distribution");
  }

  const bool saturated = r.kb_facts.saturated || r.situation_bound.saturated || r.dialog_states.low.saturated ||
                         r.dialog_states.high.saturated || r.narrative_range.low.saturated ||
                         r.narrative_range.high.saturated;
  if (saturated) r.notes.push_back("some values saturated at 2^64-1");
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t parse_count(std::string_view text, std::size_t line, std::string_view key) {
  unsigned long long v = 0;
  if (!detail::parse_unsigned(text, v)) {
    throw ParseError(line, "'" + std::string(key) + "' needs a nonnegative integer, got '" + std::string(text) + "'");
  }
  return v;
}

double parse_real(std::string_view text, std::size_t line, std::string_view key) {
  std::string s(text);
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw ParseError(line, "'" + std::string(key) + "' needs a number, got '" + s + "'");
  }
  return v;
}

}  // namespace

TaskProfile parse_profile(std::string_view text) {
  TaskProfile p;
  ConstructionSpec constructions;
  bool has_universe = false, has_target = false;

  for (const auto& line : detail::content_lines(text)) {
    const auto body = detail::trim(line.text);
    if (body.substr(0, 7) == "action " || body.substr(0, 7) == "action\t") {
      Sentence parts = split_tokens(body);
      if (parts.size() != 3) throw ParseError(line.number, "expected 'action <name> <param_count>'");
      auto count = parse_count(parts[2].view(), line.number, "action");
      try {
        p.actions.emplace_back(parts[1], count);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
      }
      continue;
    }
    auto eq = body.find('=');
    if (eq == std::string_view::npos) throw ParseError(line.number, "expected 'key = value' or 'action ...'");
    const auto key = detail::trim(body.substr(0, eq));
    const auto value = detail::trim(body.substr(eq + 1));
    if (key == "concepts") p.concepts = parse_count(value, line.number, key);
    else if (key == "vocab") p.vocab = parse_count(value, line.number, key);
    else if (key == "dialog_rounds") p.dialog_rounds = parse_count(value, line.number, key);
    else if (key == "facts_per_concept") p.facts_per_concept = parse_count(value, line.number, key);
    else if (key == "facts_per_token") p.facts_per_token = parse_count(value, line.number, key);
    else if (key == "growth_low") p.growth_low = parse_count(value, line.number, key);
    else if (key == "growth_high") p.growth_high = parse_count(value, line.number, key);
    else if (key == "main_states_low") p.main_states_low = parse_count(value, line.number, key);
    else if (key == "main_states_high") p.main_states_high = parse_count(value, line.number, key);
    else if (key == "substates") p.substates = parse_count(value, line.number, key);
    else if (key == "construction_universe") {
      constructions.universe = parse_count(value, line.number, key);
      has_universe = true;
    } else if (key == "construction_target") {
      constructions.target = parse_real(value, line.number, key);
      if (!(constructions.target > 0.0 && constructions.target <= 1.0)) {
        throw ParseError(line.number, "'construction_target' must be in (0, 1]");
      }
      has_target = true;
    } else if (key == "construction_exponent") {
      constructions.exponent = parse_real(value, line.number, key);
      if (!(constructions.exponent >= 0.0)) throw ParseError(line.number, "'construction_exponent' must be >= 0");
    } else {
      throw ParseError(line.number, "unknown key '" + std::string(key) + "'");
    }
  }
  if (p.growth_low > p.growth_high) throw ParseError(0, "growth_low must not exceed growth_high");
  if (p.main_states_low > p.main_states_high) throw ParseError(0, "main_states_low must not exceed main_states_high");
  if (has_universe != has_target) {
    throw ParseError(0, "construction_universe and construction_target must be given together");
  }
  if (has_universe && constructions.universe > 0) p.constructions = constructions;
  return p;
}

}  // namespace qx
