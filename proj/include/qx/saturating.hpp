#pragma once

#include <cstdint>
#include <limits>

namespace qx {

/// An unsigned count that clamps at UINT64_MAX and remembers that it did.
struct SaturatingCount {
  std::uint64_t value = 0;
  bool saturated = false;

  static constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

  friend constexpr SaturatingCount operator+(SaturatingCount a, SaturatingCount b) noexcept {
    if (a.value > kMax - b.value) return {kMax, true};
    return {a.value + b.value, a.saturated || b.saturated};
  }

  friend constexpr SaturatingCount operator*(SaturatingCount a, SaturatingCount b) noexcept {
    if (a.value != 0 && b.value > kMax / a.value) return {kMax, true};
    return {a.value * b.value, a.saturated || b.saturated};
  }

  friend constexpr bool operator==(SaturatingCount, SaturatingCount) = default;
};

constexpr SaturatingCount saturating_pow(std::uint64_t base, std::uint64_t exponent) noexcept {
  SaturatingCount result{1, false};
  for (std::uint64_t i = 0; i < exponent; ++i) {
    result = result * SaturatingCount{base, false};
    if (result.saturated) break;
  }
  return result;
}

}  // namespace qx
