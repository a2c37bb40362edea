#include "qx/cli.hpp"

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qx/estimator.hpp"
#include "qx/semantics.hpp"
#include "qx/synthesis.hpp"
#include "qx/zipf.hpp"

namespace qx::cli {

std::string render(const Report& report, Format format, bool styled) {
  std::ostringstream os;
  if (format == Format::kv) {
    os << "command\t" << report.command << '\n';
    os << "level\t" << level_letter(report.level) << '\n';
    for (const auto& [name, value] : report.inputs) os << "input." << name << '\t' << value << '\n';
    for (const auto& [metric, value] : report.results) os << metric << '\t' << value << '\n';
    for (const auto& note : report.notes) os << "note\t" << note << '\n';
    return os.str();
  }
  const char* bold = styled ? "\033[1m" : "";
  const char* reset = styled ? "\033[0m" : "";
  os << bold << "qx " << report.command << reset << '\n';
  os << "level: " << level_letter(report.level) << " (" << to_string(report.level) << ")\n";
  for (const auto& [name, value] : report.inputs) os << "input " << name << ": " << value << '\n';
  for (const auto& [metric, value] : report.results) os << metric << ": " << value << '\n';
  for (const auto& note : report.notes) os << "note: " << note << '\n';
  return os.str();
}

std::string format_real(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6);
  if (std::fabs(v) < 5e-7) v = 0.0;
  os << v;
  return os.str();
}

std::string format_scientific(std::uint64_t v) {
  if (v == 0) return "0";
  int exponent = static_cast<int>(std::floor(std::log10(static_cast<double>(v))));
  double mantissa = static_cast<double>(v) / std::pow(10.0, exponent);
  mantissa = std::round(mantissa * 10.0) / 10.0;
  if (mantissa >= 10.0) {
    mantissa /= 10.0;
    ++exponent;
  }
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << mantissa << 'e' << exponent;
  return os.str();
}

namespace {

/// Input problem reported with exit status 2.
class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs a reader and prefixes any error with the file path.
template <class Reader>
auto load(const std::string& path, Reader reader) {
  std::string text = read_file(path);
  try {
    return reader(text);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string count_text(SaturatingCount c) {
  std::string s = std::to_string(c.value);
  if (c.saturated) s += " (saturated)";
  return s;
}

std::string sentence_text(const Sentence& s) { return join_tokens(s); }

struct Globals {
  std::string format = "text";
  std::string level = "A";
};

struct Context {
  Format format;
  AbstractionLevel level;
  std::ostream& out;
  bool styled;

  void emit(const Report& r) const { out << render(r, format, styled); }
};

int cmd_validate(const Context& ctx, const std::string& automaton_path, const std::string& table_path) {
  auto machine = load(automaton_path, parse_automaton);
  auto table = load(table_path, parse_qa_table);
  auto mismatches = verify(machine, table);

  Report r{"validate", {{"automaton", automaton_path}, {"table", table_path}}, {}, {}, ctx.level};
  r.add("entries", std::to_string(table.size()));
  r.add("mismatches", std::to_string(mismatches.size()));
  for (const auto& m : mismatches) {
    std::string got = m.got.ok() ? m.got.answer->str() : "error(" + m.got.describe() + ")";
    r.add("mismatch", m.question.id.str() + " | " + sentence_text(m.sentence) + " | expected " + m.expected.str() +
                          " | got " + got);
  }
  ctx.emit(r);
  return mismatches.empty() ? kExitOk : kExitMismatch;
}

void add_measures(Report& r, const ComplexityReport& c, bool state_symbol, bool t_rule) {
  if (state_symbol) {
    r.add("state_count", std::to_string(c.state_count));
    r.add("symbol_count", std::to_string(c.symbol_count));
    r.add("state_symbol", std::to_string(c.state_symbol));
  }
  if (t_rule) {
    r.add("rule_count", std::to_string(c.rule_count));
    r.add("t_rule", std::to_string(c.t_rule));
  }
}

int cmd_complexity(const Context& ctx, const std::string& automaton_path, const std::string& measure) {
  auto machine = load(automaton_path, parse_automaton);
  const bool ss = measure == "state-symbol" || measure == "both";
  const bool tr = measure == "t-rule" || measure == "both";
  Report r{"complexity", {{"automaton", automaton_path}, {"measure", measure}}, {}, {}, ctx.level};
  add_measures(r, ss ? state_symbol_complexity(machine, ctx.level) : t_rule_complexity(machine, ctx.level), ss, tr);
  ctx.emit(r);
  return kExitOk;
}

int cmd_synth(const Context& ctx, const std::string& table_path, const std::string& out_path, bool no_minimize) {
  auto table = load(table_path, parse_qa_table);
  MeaningAutomaton prefix = [&] {
    try {
      return build_prefix_machine(table);
    } catch (const std::exception& e) {
      throw InputError(table_path + ": " + e.what());
    }
  }();
  const ComplexityReport before = state_symbol_complexity(prefix, ctx.level);
  MeaningAutomaton machine = no_minimize ? prefix : minimize(prefix);
  const ComplexityReport after = state_symbol_complexity(machine, ctx.level);

  Report r{"synth", {{"table", table_path}}, {}, {}, ctx.level};
  if (!out_path.empty()) r.inputs.emplace_back("out", out_path);
  r.add("entries", std::to_string(table.size()));
  r.add("minimized", no_minimize ? "no" : "yes");
  r.add("states_before", std::to_string(before.state_count));
  r.add("states_after", std::to_string(after.state_count));
  add_measures(r, after, true, true);
  r.add("verified", verify(machine, table).empty() ? "yes" : "no");
  r.notes.push_back("upper bound: smallest deterministic transducer for the fixed question ## sentence encoding");

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError(out_path + ": cannot open for writing");
    out << render_automaton(machine);
    if (!out) throw InputError(out_path + ": write failed");
  }
  ctx.emit(r);
  return kExitOk;
}

int cmd_iterate(const Context& ctx, const std::string& graph_path, const std::string& init_path,
                std::uint64_t rounds) {
  auto graph = load(graph_path, parse_link_graph);
  auto initial = load(init_path, parse_item_set);
  std::uint64_t reached = 0;
  try {
    reached = iterated_what(graph, initial, rounds);
  } catch (const UnknownItemError& e) {
    throw InputError(init_path + ": " + e.what());
  }
  Report r{"iterate", {{"graph", graph_path}, {"init", init_path}}, {}, {}, ctx.level};
  r.add("nodes", std::to_string(graph.node_count()));
  r.add("edges", std::to_string(graph.edge_count()));
  r.add("initial_items", std::to_string(initial.size()));
  r.add("rounds", std::to_string(rounds));
  r.add("iterated_what", std::to_string(reached));
  if (!initial.empty()) {
    r.add("fresh_link_bound", count_text(iterated_estimate(initial.size(), graph.max_out_degree(), rounds)));
    r.notes.push_back("fresh_link_bound assumes every link leads to a new item, at the graph's maximum out-degree");
  }
  ctx.emit(r);
  return kExitOk;
}

int cmd_zipf(const Context& ctx, const std::string& corpus_path, std::optional<double> target,
             std::uint64_t min_freq, const std::string& export_path) {
  auto corpus = load(corpus_path, [](const std::string& text) {
    Sentence tokens;
    std::istringstream in(text);
    std::string word;
    while (in >> word) {
      if (!Token::is_valid(word)) throw Error("token contains '#': " + word);
      tokens.emplace_back(std::move(word));
    }
    if (tokens.empty()) throw Error("empty corpus");
    return tokens;
  });
  const RankTable full = rank_frequency(corpus);
  const RankTable table = full.truncated(min_freq);
  ZipfFit fit;
  try {
    fit = fit_zipf(table);
  } catch (const std::invalid_argument& e) {
    throw InputError(corpus_path + ": " + e.what());
  }

  Report r{"zipf", {{"corpus", corpus_path}}, {}, {}, ctx.level};
  if (min_freq > 1) r.inputs.emplace_back("min_freq", std::to_string(min_freq));
  r.add("tokens", std::to_string(corpus.size()));
  r.add("types", std::to_string(full.size()));
  r.add("n_ranks", std::to_string(fit.n_ranks));
  r.add("exponent", format_real(fit.exponent));
  r.add("constant", format_real(fit.constant));
  r.add("residual", format_real(fit.residual));
  if (target) {
    r.add("coverage_target", format_real(*target));
    r.add("required_rank", std::to_string(required_rank(table, *target)));
  }
  r.notes.push_back("least squares in log-log space over all retained ranks");

  if (!export_path.empty()) {
    std::ofstream out(export_path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError(export_path + ": cannot open for writing");
    out << render_rank_table(table);
    r.inputs.emplace_back("export", export_path);
  }
  ctx.emit(r);
  return kExitOk;
}

int cmd_estimate(const Context& ctx, const std::string& profile_path) {
  auto profile = load(profile_path, parse_profile);
  auto e = full_report(profile);
  Report r{"estimate", {{"profile", profile_path}}, {}, {}, ctx.level};
  r.add("kb_facts", count_text(e.kb_facts));
  r.add("domain", std::string(to_string(e.domain_class)));
  r.add("situation_bound", count_text(e.situation_bound));
  r.add("dialog_states_low", count_text(e.dialog_states.low));
  r.add("dialog_states_high", count_text(e.dialog_states.high));
  r.add("narrative_low", count_text(e.narrative_range.low));
  r.add("narrative_high", count_text(e.narrative_range.high));
  r.add("narrative_band",
        format_scientific(e.narrative_range.low.value) + ".." + format_scientific(e.narrative_range.high.value));
  if (e.grammar_constructions) r.add("grammar_constructions", std::to_string(*e.grammar_constructions));
  r.notes = e.notes;
  ctx.emit(r);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Meaning-automaton and Q-complexity toolkit", "qx"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "kv"}));
  app.add_option("--level", g.level, "Abstraction level A|B|C|D")->check(CLI::IsMember({"A", "B", "C", "D"}));

  std::string automaton_path, table_path, graph_path, init_path, corpus_path, profile_path, out_path, export_path;
  std::string measure = "both";
  bool no_minimize = false;
  std::uint64_t rounds = 1;
  std::uint64_t min_freq = 1;
  std::optional<double> coverage_target;

  auto* validate = app.add_subcommand("validate", "Check an automaton against a QA table");
  validate->add_option("automaton", automaton_path)->required();
  validate->add_option("table", table_path)->required();

  auto* complexity = app.add_subcommand("complexity", "Measure an automaton");
  complexity->add_option("automaton", automaton_path)->required();
  complexity->add_option("--measure", measure)->check(CLI::IsMember({"state-symbol", "t-rule", "both"}));

  auto* synth = app.add_subcommand("synth", "Synthesize a (minimized) automaton from a QA table");
  synth->add_option("table", table_path)->required();
  synth->add_option("--out", out_path, "Write the automaton here");
  synth->add_flag("--no-minimize", no_minimize);

  auto* iterate = app.add_subcommand("iterate", "Iterated what-complexity over an answer-link graph");
  iterate->add_option("graph", graph_path)->required();
  iterate->add_option("init", init_path)->required();
  iterate->add_option("--rounds", rounds);

  auto* zipf = app.add_subcommand("zipf", "Fit a rank-frequency law to a corpus");
  zipf->add_option("corpus", corpus_path)->required();
  zipf->add_option("--coverage", coverage_target)->check(CLI::Range(0.0, 1.0));
  zipf->add_option("--min-freq", min_freq);
  zipf->add_option("--export", export_path, "Write the rank table here");

  auto* estimate = app.add_subcommand("estimate", "Estimate task complexity from a profile");
  estimate->add_option("profile", profile_path)->required();

  std::vector<const char*> argv{"qx"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  if (coverage_target && !(*coverage_target > 0.0)) {
    err << "qx: error: --coverage must be in (0, 1]\n";
    return kExitInput;
  }

  const char* no_color = std::getenv("QX_NO_COLOR");
  const bool styled = &out == &std::cout && ::isatty(STDOUT_FILENO) && (no_color == nullptr);
  Context ctx{g.format == "kv" ? Format::kv : Format::text, *parse_level(g.level), out, styled};

  try {
    if (*validate) return cmd_validate(ctx, automaton_path, table_path);
    if (*complexity) return cmd_complexity(ctx, automaton_path, measure);
    if (*synth) return cmd_synth(ctx, table_path, out_path, no_minimize);
    if (*iterate) return cmd_iterate(ctx, graph_path, init_path, rounds);
    if (*zipf) return cmd_zipf(ctx, corpus_path, coverage_target, min_freq, export_path);
    if (*estimate) return cmd_estimate(ctx, profile_path);
  } catch (const std::exception& e) {
    err << "qx: error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace qx::cli
