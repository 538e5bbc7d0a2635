#pragma once

/**
 * @file coupling.hpp
 * @brief Lattice values of the empirical process of the first tries, and the
 * reconstruction of the visit profile from them.
 *
 * With Y_k the number of cars whose first try is k:
 *   A_k = Y_1 + ... + Y_k - k n / m   (stored as m * A_k, an integer)
 *   C_k = Y_1 + ... + Y_k - k,        C_{k+m} = C_k - l
 * V is the first index in 1..m minimizing A_k; place V is always empty.
 */

#include <cstdint>
#include <vector>

#include "parkphase/parking.hpp"

namespace parkphase {

struct CenteredCounts {
  Place m = 0;
  std::int64_t n = 0;
  std::vector<std::int64_t> y;         ///< y[k-1] = Y_k, k = 1..m
  std::vector<std::int64_t> scaled_a;  ///< scaled_a[k] = m * A_k, k = 0..m
  std::vector<std::int64_t> c;         ///< c[k] = C_k, k = 0..m
  Place v = 1;

  [[nodiscard]] std::int64_t empty_count() const noexcept { return m - n; }

  /// C_k for any integer k through C_{k+m} = C_k - l.
  [[nodiscard]] std::int64_t c_at(std::int64_t k) const;

  /// Y_k for any integer k, periodic.
  [[nodiscard]] std::int64_t y_at(std::int64_t k) const;

  /// Place index in 1..m for any integer k.
  [[nodiscard]] Place wrap(std::int64_t k) const noexcept { return ((k - 1) % m + m) % m + 1; }
};

CenteredCounts centered_counts(const ParkingScheme& scheme);
CenteredCounts centered_counts(Place m, std::span<const Place> tries);

/// H_{V+k} = C_{V+k} - C_V + max_{1<=i<=k} (C_{V-1} - C_{V+i-1})_+, H_V = 0.
Profile profile_from_counts(const CenteredCounts& cc);

/// H_{k+1} = Y_{k+1} + (H_k - 1)_+ run once around the circle from H_V = 0.
Profile profile_by_recurrence(const CenteredCounts& cc);

/// Places V+k (0 <= k < m) at which -C has a strict record, in record order.
std::vector<Place> empty_places_as_records(const CenteredCounts& cc);

}  // namespace parkphase
