#pragma once

// Rank-frequency tables, power-law fits, and coverage-driven estimates of how
// many ranked items (words, constructions) a task needs.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qx/token.hpp"

namespace qx {

struct RankEntry {
  std::uint64_t rank;
  Token item;
  std::uint64_t frequency;
};

/// Ranks 1..N, frequencies nonincreasing and at least 1.
class RankTable {
 public:
  /// Throws std::invalid_argument when the invariants do not hold.
  explicit RankTable(std::vector<RankEntry> entries);

  const std::vector<RankEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::uint64_t total() const noexcept { return total_; }

  /// Entries with frequency >= min_frequency (a prefix, since frequencies
  /// are nonincreasing).
  RankTable truncated(std::uint64_t min_frequency) const;

 private:
  std::vector<RankEntry> entries_;
  std::uint64_t total_ = 0;
};

/// Counts tokens and ranks them by descending frequency; ties keep the order
/// of first occurrence. Throws std::invalid_argument on an empty corpus.
RankTable rank_frequency(const Sentence& corpus);

/// frequency ~= constant * rank^(-exponent)
struct ZipfFit {
  double exponent = 0.0;
  double constant = 0.0;
  /// Root-mean-square error of the fit in log-log space.
  double residual = 0.0;
  std::size_t n_ranks = 0;
};

/// Ordinary least squares of log(frequency) on log(rank). Frequencies are
/// given in rank order starting at rank 1 and must be positive. Throws
/// std::invalid_argument with fewer than 2 ranks.
ZipfFit fit_zipf(std::span<const double> frequencies);
ZipfFit fit_zipf(const RankTable& table);

/// Share of the total mass held by ranks 1..k. Throws std::out_of_range
/// unless 1 <= k <= N. coverage(t, N) is exactly 1.
double coverage(const RankTable& table, std::size_t k);

/// Smallest k with coverage(t, k) >= target. Throws std::invalid_argument
/// unless 0 < target <= 1.
std::size_t required_rank(const RankTable& table, double target);

/// required_rank over an idealised table with mass r^(-exponent) at rank r,
/// r = 1..universe. Throws std::invalid_argument on a zero universe, a target
/// outside (0, 1], or a negative exponent.
std::size_t estimate_constructions(std::uint64_t universe, double target, double exponent);

/// `rank <TAB> item <TAB> frequency` lines.
std::string render_rank_table(const RankTable& table);

}  // namespace qx
