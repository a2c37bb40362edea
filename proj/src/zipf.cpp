#include "qx/zipf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qx {

RankTable::RankTable(std::vector<RankEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.rank != i + 1) throw std::invalid_argument("rank table: ranks must run 1..N consecutively");
    if (e.frequency == 0) throw std::invalid_argument("rank table: frequencies must be at least 1");
    if (i > 0 && e.frequency > entries_[i - 1].frequency) {
      throw std::invalid_argument("rank table: frequencies must be nonincreasing with rank");
    }
    total_ += e.frequency;
  }
}

RankTable RankTable::truncated(std::uint64_t min_frequency) const {
  auto end = std::find_if(entries_.begin(), entries_.end(),
                          [&](const RankEntry& e) { return e.frequency < min_frequency; });
  return RankTable(std::vector<RankEntry>(entries_.begin(), end));
}

RankTable rank_frequency(const Sentence& corpus) {
  if (corpus.empty()) throw std::invalid_argument("rank_frequency: empty corpus");
  struct Count {
    std::size_t first_seen;
    std::uint64_t frequency;
  };
  std::unordered_map<Token, Count> counts;
  std::vector<const Token*> order;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto [it, inserted] = counts.try_emplace(corpus[i], Count{i, 0});
    if (inserted) order.push_back(&it->first);
    ++it->second.frequency;
  }
  // `order` is already by first occurrence; a stable sort keeps that for ties.
  std::stable_sort(order.begin(), order.end(),
                   [&](const Token* a, const Token* b) { return counts.at(*a).frequency > counts.at(*b).frequency; });
  std::vector<RankEntry> entries;
  entries.reserve(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) entries.push_back({r + 1, *order[r], counts.at(*order[r]).frequency});
  return RankTable(std::move(entries));
}

ZipfFit fit_zipf(std::span<const double> frequencies) {
  const std::size_t n = frequencies.size();
  if (n < 2) throw std::invalid_argument("fit_zipf: need at least 2 ranks");
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(frequencies[i] > 0.0)) throw std::invalid_argument("fit_zipf: frequencies must be positive");
    x[i] = std::log(static_cast<double>(i + 1));
    y[i] = std::log(frequencies[i]);
  }
  const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  // Centring y on y[0] rather than its mean gives the same slope, and an
  // exact zero for flat data.
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mean_x) * (x[i] - mean_x);
    sxy += (x[i] - mean_x) * (y[i] - y[0]);
  }
  const double slope = sxy / sxx;
  const double intercept = mean_y - slope * mean_x;
  double sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = y[i] - (intercept + slope * x[i]);
    sse += e * e;
  }
  ZipfFit fit;
  // -0.0 would print as "-0" for flat data.
  fit.exponent = slope == 0.0 ? 0.0 : -slope;
  fit.constant = std::exp(intercept);
  fit.residual = std::sqrt(sse / static_cast<double>(n));
  fit.n_ranks = n;
  return fit;
}

ZipfFit fit_zipf(const RankTable& table) {
  std::vector<double> f;
  f.reserve(table.size());
  for (const auto& e : table.entries()) f.push_back(static_cast<double>(e.frequency));
  return fit_zipf(f);
}

double coverage(const RankTable& table, std::size_t k) {
  if (k < 1 || k > table.size()) {
    throw std::out_of_range("coverage: k=" + std::to_string(k) + " outside 1.." + std::to_string(table.size()));
  }
  std::uint64_t mass = 0;
  for (std::size_t i = 0; i < k; ++i) mass += table.entries()[i].frequency;
  return static_cast<double>(mass) / static_cast<double>(table.total());
}

std::size_t required_rank(const RankTable& table, double target) {
  if (!(target > 0.0 && target <= 1.0)) throw std::invalid_argument("required_rank: target must be in (0, 1]");
  if (table.size() == 0) throw std::invalid_argument("required_rank: empty table");
  // Same arithmetic as coverage(), so required_rank(t, coverage(t, k)) <= k.
  const double total = static_cast<double>(table.total());
  std::uint64_t mass = 0;
  for (std::size_t k = 1; k <= table.size(); ++k) {
    mass += table.entries()[k - 1].frequency;
    if (static_cast<double>(mass) / total >= target) return k;
  }
  return table.size();
}

std::size_t estimate_constructions(std::uint64_t universe, double target, double exponent) {
  if (universe == 0) throw std::invalid_argument("estimate_constructions: universe must be at least 1");
  if (!(target > 0.0 && target <= 1.0)) throw std::invalid_argument("estimate_constructions: target must be in (0, 1]");
  if (!(exponent >= 0.0)) throw std::invalid_argument("estimate_constructions: exponent must be nonnegative");
  std::vector<double> mass(universe);
  for (std::uint64_t r = 1; r <= universe; ++r) mass[r - 1] = std::pow(static_cast<double>(r), -exponent);
  const double total = std::accumulate(mass.begin(), mass.end(), 0.0);
  // Relative slack absorbs last-bit differences between equal sums computed
  // along different paths; targets are never specified that finely.
  const double needed = target * total * (1.0 - 1e-12);
  double cumulative = 0.0;
  for (std::uint64_t k = 1; k <= universe; ++k) {
    cumulative += mass[k - 1];
    if (cumulative >= needed) return k;
  }
  return universe;
}

std::string render_rank_table(const RankTable& table) {
  std::ostringstream os;
  for (const auto& e : table.entries()) os << e.rank << '\t' << e.item << '\t' << e.frequency << '\n';
  return os.str();
}

}  // namespace qx
