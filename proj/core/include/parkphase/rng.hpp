#pragma once

/**
 * @file rng.hpp
 * @brief Seeded, platform-independent random source.
 *
 * Every draw is derived from std::mt19937_64, whose output sequence is fixed
 * by the C++ standard. The standard distributions are not, so integer and
 * real variates are produced here from raw engine words.
 */

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace parkphase {

/// Name recorded in output metadata.
inline constexpr std::string_view kGeneratorName = "mt19937_64";

/// splitmix64 finalizer; used to derive independent replica seeds.
[[nodiscard]] std::uint64_t mix64(std::uint64_t x) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Stream for replica `replica` of a run seeded with `seed`.
  [[nodiscard]] static Rng for_replica(std::uint64_t seed, std::uint64_t replica) {
    return Rng(mix64(seed ^ mix64(replica + 0x9e3779b97f4a7c15ULL)));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer on [0, bound), unbiased. bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform integer on [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    uniform_below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Standard Gaussian (Marsaglia polar method).
  double normal();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

}  // namespace parkphase
