#pragma once

/**
 * @file bijection.hpp
 * @brief Labeled trees and Pavlov forests versus confined parking schemes.
 *
 * A tree on k vertices is rooted at v_k. Its image is the confined scheme of
 * k-1 cars on k places built by a breadth-first search whose queue is kept
 * sorted by label: car j's first try is the step at which v_j enters the
 * queue, and car j parks at the step at which v_j reaches the head.
 */

#include <compare>
#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "parkphase/parking.hpp"
#include "parkphase/rng.hpp"

namespace parkphase {

class LabeledTree {
 public:
  LabeledTree() = default;

  /// parent[j-1] is the parent of v_j, j = 1..k-1; entries in 1..k.
  /// Throws std::invalid_argument unless the map is a tree rooted at v_k.
  LabeledTree(std::int64_t k, std::vector<std::int64_t> parent);

  [[nodiscard]] std::int64_t k() const noexcept { return k_; }
  [[nodiscard]] std::int64_t root() const noexcept { return k_; }
  [[nodiscard]] std::int64_t parent(std::int64_t v) const {
    return parent_.at(static_cast<std::size_t>(v - 1));
  }
  [[nodiscard]] const std::vector<std::int64_t>& parents() const noexcept { return parent_; }

  /// children[v-1], ascending.
  [[nodiscard]] std::vector<std::vector<std::int64_t>> children() const;

  bool operator==(const LabeledTree&) const = default;

 private:
  std::int64_t k_ = 1;
  std::vector<std::int64_t> parent_;
};

struct ForestParent {
  bool is_root = false;
  std::int64_t label = 0;  ///< r_label if is_root, else v_label
  auto operator<=>(const ForestParent&) const = default;
};

/// l trees with roots r_1..r_l and non-roots v_1..v_n labeled separately.
class PavlovForest {
 public:
  PavlovForest() = default;

  /// Throws std::invalid_argument on out-of-range labels or a cycle among non-roots.
  PavlovForest(std::int64_t roots, std::vector<ForestParent> parent);

  [[nodiscard]] std::int64_t roots() const noexcept { return roots_; }
  [[nodiscard]] std::int64_t n() const noexcept { return static_cast<std::int64_t>(parent_.size()); }
  [[nodiscard]] const ForestParent& parent(std::int64_t v) const {
    return parent_.at(static_cast<std::size_t>(v - 1));
  }
  [[nodiscard]] const std::vector<ForestParent>& parents() const noexcept { return parent_; }

  /// Root label of the tree holding v_j, for each j.
  [[nodiscard]] std::vector<std::int64_t> tree_of() const;

  /// Non-root counts, indexed by root label.
  [[nodiscard]] std::vector<std::int64_t> tree_sizes() const;

  bool operator==(const PavlovForest&) const = default;

 private:
  std::int64_t roots_ = 0;
  std::vector<ForestParent> parent_;
};

ParkingScheme tree_to_confined(const LabeledTree& tree);

/// Queue length at each step of the search; equals the image scheme's profile
/// on places 1..k-1.
std::vector<std::int64_t> bfs_queue_lengths(const LabeledTree& tree);

/// Throws std::invalid_argument unless the scheme is confined with n = m - 1.
LabeledTree confined_to_tree(const ParkingScheme& scheme);

/// Tree r_i holds the cars parked between the (i-1)th and ith empty places.
/// Throws std::invalid_argument on a non-confined scheme.
PavlovForest parking_to_forest(const ParkingScheme& scheme);

/// Inverse of parking_to_forest: m = n + l places, blocks laid out by root label.
ParkingScheme forest_to_parking(const PavlovForest& forest);

/// Tree on k vertices from a Prufer word of length k-2 over 1..k, rooted at v_k.
LabeledTree prufer_decode(std::int64_t k, const std::vector<std::int64_t>& word);

/// Uniform labeled tree on k vertices.
LabeledTree random_labeled_tree(std::int64_t k, Rng& rng);

/// {"k", "root", "parent": {"1": p1, ...}}
void to_json(nlohmann::json& j, const LabeledTree& tree);
/// {"roots", "n", "parent": {"v1": "r2", "v2": "v1", ...}}
void to_json(nlohmann::json& j, const PavlovForest& forest);

}  // namespace parkphase
