#pragma once

/**
 * @file lattice.hpp
 * @brief Lattice paths for the limit objects: the excursion, the operator
 * Psi_lambda, its excursion intervals, and the sampled-block statistics.
 *
 * A path stores integer ticks at t = j/N, j = 0..N, each worth `tick`. Psi
 * works entirely in ticks, so the semigroup and refinement laws hold exactly;
 * lambda enters as a drift of round(lambda / (N tick)) ticks per step.
 *
 * Intervals of a Psi image are the gaps [a, b) between consecutive grid zeros,
 * taken circularly. A gap with b - a = 1 has no interior point; it has width
 * 1/N in the full partition and is left out of the excursion set.
 */

#include <cstdint>
#include <span>
#include <vector>

#include "parkphase/coupling.hpp"
#include "parkphase/rng.hpp"

namespace parkphase {

struct LatticePath {
  std::int64_t n = 1;               ///< resolution N
  std::vector<std::int64_t> ticks;  ///< N + 1 values
  double tick = 1.0;
  bool circular = true;

  LatticePath() = default;
  /// Throws std::invalid_argument unless |ticks| = N + 1, N >= 1 and tick > 0.
  LatticePath(std::int64_t resolution, std::vector<std::int64_t> values, double tick_size,
              bool is_circular = true);

  [[nodiscard]] double value(std::int64_t j) const {
    return static_cast<double>(ticks.at(static_cast<std::size_t>(j))) * tick;
  }
  [[nodiscard]] double max_value() const;

  bool operator==(const LatticePath&) const = default;
};

/// Drift per grid step in ticks for lambda.
std::int64_t drift_ticks(const LatticePath& path, double lambda);

/// Psi with an integer drift per step:
///   Psi(t) = g(t) - inf_{s <= t} g(s),  g(j) = v(j) - drift j,
/// extended periodically with g(j - N) = g(j) + drift N - (v(N) - v(0)).
/// Throws std::invalid_argument on a non-circular path or when
/// drift N < v(N) - v(0).
LatticePath psi_ticks(const LatticePath& path, std::int64_t drift);

LatticePath psi(const LatticePath& path, double lambda);

/// C_k for k = 0..m in ticks of 1/sqrt(n); a bridge-like circular path.
LatticePath lattice_from_counts(const CenteredCounts& cc);

/// Profile of N-1 uniform cars on N places read from the empty place, scaled
/// by 2^20 ticks of 1/(2^20 sqrt N): zero at both ends and positive inside.
/// Requires N >= 2.
LatticePath sample_excursion(std::int64_t resolution, std::uint64_t seed);
LatticePath sample_excursion(std::int64_t resolution, Rng& rng);

struct GridInterval {
  std::int64_t a = 0;
  std::int64_t b = 0;  ///< may exceed N when the gap wraps
  [[nodiscard]] std::int64_t length() const noexcept { return b - a; }
  bool operator==(const GridInterval&) const = default;
};

/// Gaps between consecutive zeros of a nonnegative circular path, ordered by a.
std::vector<GridInterval> zero_gaps(const LatticePath& image);

struct ExcursionSet {
  std::int64_t n = 1;
  std::vector<GridInterval> intervals;  ///< gaps of length >= 2, widest first
  std::vector<double> widths;           ///< descending, length / N
};

ExcursionSet excursion_widths(const LatticePath& path, double lambda);

struct SampledBlock {
  double width = 0.0;
  double g = 0.0;
  double d = 0.0;  ///< may exceed 1 when the gap wraps
  GridInterval interval;
};

/// The gap of psi(path, lambda) holding grid time rho1 N; a zero belongs to
/// the gap on its right. rho1 must lie in [0, 1).
SampledBlock sample_R1(const LatticePath& path, double lambda, double rho1);

struct SubordinatorSample {
  std::vector<double> lambda;
  std::vector<double> sigma;  ///< -1 + 1/R1(lambda)
};

/// Throws std::invalid_argument unless the grid is strictly increasing.
SubordinatorSample subordinator_path(const LatticePath& path, double rho1,
                                     std::span<const double> lambda_grid);

/// Restriction of a circular path to grid times a..b (b may exceed N), with the
/// Brownian rescaling to [0, 1]: values scaled by ((b - a)/N)^{-1/2}.
LatticePath restrict_rescaled(const LatticePath& path, std::int64_t a, std::int64_t b);

/// Circular shift: result(j) = path(j + s mod N).
LatticePath rotate(const LatticePath& path, std::int64_t s);

struct Decomposition {
  double r1 = 0.0;
  LatticePath q;          ///< sampled excursion, rescaled
  LatticePath r_shifted;  ///< the rest of the period, rescaled, shifted by floor(w N_r)
};

/// Throws std::domain_error when the sampled gap covers the whole period.
Decomposition decompose(const LatticePath& path, double lambda, double rho1, double w);

/// S_1..S_k: cumulative widths of the first k distinct gaps hit by the
/// sequence of uniform points rho. Throws std::runtime_error if the image has
/// fewer than k gaps or rho runs out first.
std::vector<double> size_biased_sums(const LatticePath& path, double lambda,
                                     std::span<const double> rho, std::int64_t k);

}  // namespace parkphase
