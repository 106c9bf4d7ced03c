#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace contrarith {

/// Deterministic 64-bit generator (splitmix64 core). The standard library's
/// distributions are implementation-defined, so all sampling goes through
/// this class to keep datasets byte-identical across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Derives an independent stream from (seed, label, index). Per-item
  /// generators come from here so output never depends on iteration order or
  /// thread count.
  static Rng derive(std::uint64_t seed, std::string_view label, std::uint64_t index = 0);

  std::uint64_t next_u64();

  /// Unbiased uniform value in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n);

  /// Uniform value in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi);

  /// Uniform element of a non-empty vector.
  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

private:
  std::uint64_t state_;
};

} // namespace contrarith
