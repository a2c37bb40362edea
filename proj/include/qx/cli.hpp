#pragma once

// Command-line front end. Commands write a Report to stdout; exit status is
// 0 on success, 1 when validation finds mismatches, 2 on bad input.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qx/automaton.hpp"

namespace qx::cli {

enum class Format { text, kv };

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> results;
  std::vector<std::string> notes;
  AbstractionLevel level = AbstractionLevel::A_task;

  void add(std::string metric, std::string value) { results.emplace_back(std::move(metric), std::move(value)); }
};

/// Deterministic rendering. `styled` only affects text mode.
std::string render(const Report& report, Format format, bool styled = false);

/// Fixed notation, 6 decimals; values that round to zero print as 0.000000.
std::string format_real(double v);

/// Two-significant-digit scientific form: 112000 -> "1.1e5".
std::string format_scientific(std::uint64_t v);

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInput = 2;

/// Entry point shared by the `qx` binary and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qx::cli
