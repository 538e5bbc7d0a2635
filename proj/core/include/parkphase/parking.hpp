#pragma once

/**
 * @file parking.hpp
 * @brief Linear-probing placement ("parking") on a circular table.
 *
 * A table has m places numbered 1..m, place m+1 being place 1 again. Car i
 * arrives with a first try t_i and takes the first free place in the circular
 * order t_i, t_i+1, ... All interfaces are 1-indexed.
 */

#include <cstdint>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "parkphase/rng.hpp"

namespace parkphase {

using Place = std::int64_t;

/// Immutable transcript of n < m insertions.
class ParkingScheme {
 public:
  ParkingScheme() = default;

  [[nodiscard]] Place m() const noexcept { return m_; }
  [[nodiscard]] std::int64_t n() const noexcept {
    return static_cast<std::int64_t>(tries_.size());
  }
  [[nodiscard]] std::int64_t empty_count() const noexcept { return m_ - n(); }

  [[nodiscard]] std::span<const Place> tries() const noexcept { return tries_; }
  [[nodiscard]] std::span<const Place> placements() const noexcept { return placements_; }

  [[nodiscard]] bool occupied(Place p) const { return occupied_.at(static_cast<std::size_t>(p - 1)); }

  /// Arrival index (1-based) of the car parked at p, 0 if p is empty.
  [[nodiscard]] std::int64_t car_at(Place p) const { return car_at_.at(static_cast<std::size_t>(p - 1)); }

  /// Place m is empty.
  [[nodiscard]] bool confined() const { return !occupied(m_); }

  bool operator==(const ParkingScheme& other) const {
    return m_ == other.m_ && tries_ == other.tries_;
  }

 private:
  friend ParkingScheme park(Place m, std::span<const Place> tries);
  friend ParkingScheme park_naive(Place m, std::span<const Place> tries);

  Place m_ = 0;
  std::vector<Place> tries_;
  std::vector<Place> placements_;
  std::vector<bool> occupied_;
  std::vector<std::int64_t> car_at_;
};

/// Per-place visit counts: h[k-1] cars tried place k, successfully or not.
struct Profile {
  std::vector<std::int64_t> h;

  [[nodiscard]] std::int64_t at(Place k) const { return h.at(static_cast<std::size_t>(k - 1)); }
  bool operator==(const Profile&) const = default;
};

struct Block {
  Place start = 0;          ///< first place of the run
  std::int64_t size = 0;    ///< number of cars
  std::int64_t birth = 0;   ///< smallest arrival index among its cars
  bool operator==(const Block&) const = default;
};

/// Maximal circular runs of occupied places.
struct BlockDecomposition {
  std::vector<Block> blocks;                  ///< ordered by start place
  std::vector<std::int64_t> sorted_sizes;     ///< descending
  std::vector<std::int64_t> birth_order_sizes;///< ordered by birth

  bool operator==(const BlockDecomposition&) const = default;
};

/// Runs the probing process; amortized near-constant cost per car.
/// Throws std::invalid_argument if |tries| >= m or a try is outside 1..m.
ParkingScheme park(Place m, std::span<const Place> tries);

/// Same contract as park(), probing one place at a time.
ParkingScheme park_naive(Place m, std::span<const Place> tries);

/// Visit counts via per-car circular range increments.
Profile profile(const ParkingScheme& scheme);

/// Visit counts by walking each car's probe sequence.
Profile profile_naive(const ParkingScheme& scheme);

BlockDecomposition blocks(const ParkingScheme& scheme);

/// Draws n i.i.d. uniform first tries on 1..m.
ParkingScheme simulate_uniform(Place m, std::int64_t n, std::uint64_t seed);
ParkingScheme simulate_uniform(Place m, std::int64_t n, Rng& rng);

/// Uniform first tries without building a scheme.
std::vector<Place> uniform_tries(Place m, std::int64_t n, Rng& rng);

/// Decompositions after the first checkpoints[i] arrivals (increasing, each < m
/// and <= |tries|), computed in a single pass.
std::vector<BlockDecomposition> arrival_trajectory(Place m, std::span<const Place> tries,
                                                   std::span<const std::int64_t> checkpoints);

/// Rotates all tries by r places (mod m).
std::vector<Place> rotate_tries(Place m, std::span<const Place> tries, std::int64_t r);

/// {m, tries[], placements[], blocks[[start,size]...]}
void to_json(nlohmann::json& j, const ParkingScheme& scheme);
void to_json(nlohmann::json& j, const BlockDecomposition& decomposition);

}  // namespace parkphase
