#pragma once

/**
 * @file coalescent.hpp
 * @brief Discrete additive coalescent: three constructions of one chain.
 *
 * State k (k = 0..m-1) is the multiset of m-k fragment sizes, counting
 * non-roots (or cars), zeros included; it sums to k. Fragmentation reads the
 * states from k = m-1 down to 0, coalescence reads them upward.
 *
 *   (a) a random tree shape whose edges are deleted in uniform random order;
 *   (b) a labeled tree cut at the father edges of v_{m-1}, v_{m-2}, ..., v_1;
 *   (c) the blocks of a confined parking process, one arrival at a time.
 */

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "parkphase/bijection.hpp"
#include "parkphase/parking.hpp"
#include "parkphase/rng.hpp"

namespace parkphase {

enum class MassConvention {
  raw,          ///< non-root count / block size
  with_empty,   ///< size + 1: a block together with one empty place; total mass m
};

/// Two fragments of sizes low <= high merge into one of size low + high + 1.
struct MergeEvent {
  std::int64_t merged = 0;
  std::int64_t low = 0;
  std::int64_t high = 0;
  auto operator<=>(const MergeEvent&) const = default;
};

/// Stores the merge events; states are replayed on request.
class CoalescentChain {
 public:
  CoalescentChain() = default;
  CoalescentChain(std::int64_t m, std::vector<MergeEvent> events);

  [[nodiscard]] std::int64_t m() const noexcept { return m_; }
  [[nodiscard]] std::size_t length() const noexcept { return events_.size() + 1; }
  [[nodiscard]] const std::vector<MergeEvent>& events() const noexcept { return events_; }

  /// Sizes at state k, descending.
  [[nodiscard]] std::vector<std::int64_t> state(std::int64_t k,
                                                MassConvention mass = MassConvention::raw) const;

  /// States 0..m-1 (coalescence order).
  [[nodiscard]] std::vector<std::vector<std::int64_t>> states(
      MassConvention mass = MassConvention::raw) const;

  /// States m-1..0 (fragmentation order).
  [[nodiscard]] std::vector<std::vector<std::int64_t>> fragmentation_states(
      MassConvention mass = MassConvention::raw) const;

  bool operator==(const CoalescentChain&) const = default;

 private:
  std::int64_t m_ = 1;
  std::vector<MergeEvent> events_;  ///< events_[k-1] turns state k-1 into state k
};

/// Chain (b). Cutting v_j's father edge detaches v_j with its remaining descendants.
CoalescentChain fragmentation_chain_deterministic(const LabeledTree& tree);

/// Chain (b) as forests: entry k is the forest with non-roots v_1..v_k. Each cut
/// vertex becomes a root labeled right after the root of the tree it left, later
/// roots shifting up by one. Quadratic; meant for small trees.
std::vector<PavlovForest> fragmentation_forests(const LabeledTree& tree);

/// Rooted tree shape on m vertices: a uniform labeled tree with its labels ignored.
LabeledTree sample_shape(std::int64_t m, Rng& rng);

struct RandomFragmentation {
  CoalescentChain chain;
  /// The shape relabeled so that the child end of the i-th deleted edge is v_{m-i}.
  LabeledTree relabeled;
};

/// Chain (a): delete the shape's edges in a uniform order drawn from `seed`.
/// The chain is accumulated by merging components in reverse deletion order.
RandomFragmentation fragmentation_chain_random(const LabeledTree& shape, std::uint64_t seed);

/// Chain (c): state k holds the block sizes after k arrivals, one entry per
/// empty place (the block to its left). Requires |tries| = m - 1 and a confined
/// final scheme; throws std::invalid_argument otherwise.
CoalescentChain coalescent_from_parking(Place m, std::span<const Place> tries);

struct TransitionEstimate {
  std::int64_t accepted = 0;
  std::int64_t trials = 0;
  std::int64_t merges = 0;
  double frequency = 0.0;
  double standard_error = 0.0;
  double target = 0.0;  ///< merge_probability(x, y, l, m)
};

/// Conditional Monte Carlo for one merge: draw uniform schemes of m - l cars
/// until one holds a block of size x and another of size y (size 0 counts:
/// the gap before an empty place), mark such a pair uniformly, and record
/// whether the next uniform car merges exactly the marked pair. Stops after
/// `accepted` conditioned draws. Throws std::runtime_error once the acceptance
/// rate is certain to fall below 1e-3.
TransitionEstimate transition_frequency_check(Place m, std::int64_t l, std::int64_t x,
                                              std::int64_t y, std::int64_t accepted,
                                              std::uint64_t seed);

struct PointProcessAtom {
  double start = 0.0;  ///< (empty place - V) mod m, over m
  double width = 0.0;  ///< (1 + cars up to the next empty place) / m
  bool operator==(const PointProcessAtom&) const = default;
};

struct PointProcessSnapshot {
  double lambda = 0.0;
  std::int64_t n = 0;  ///< floor(m - lambda sqrt m)
  std::vector<PointProcessAtom> atoms;  ///< by start
};

/// Blocks after the first n(lambda) arrivals, each starting at an empty place.
/// Throws std::domain_error if lambda sqrt m > m or n(lambda) = m, and
/// std::invalid_argument if the scheme holds fewer than n(lambda) cars.
std::vector<PointProcessSnapshot> point_process_extraction(const ParkingScheme& scheme,
                                                           std::span<const double> lambda_grid);

}  // namespace parkphase
