#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "parkphase/lattice.hpp"
#include "parkphase/stats.hpp"

using namespace parkphase;

namespace {

LatticePath from_ticks(std::vector<std::int64_t> v, double tick = 1.0) {
  const auto n = static_cast<std::int64_t>(v.size()) - 1;
  return LatticePath(n, std::move(v), tick);
}

// Psi straight from the definition: inf over s in (t - N, t] of the periodic g.
std::vector<std::int64_t> psi_brute(const LatticePath& p, std::int64_t drift) {
  const auto n = p.n;
  const auto shift = drift * n - (p.ticks.back() - p.ticks.front());
  const auto g = [&](std::int64_t s) {
    std::int64_t q = 0;
    while (s < 0) {
      s += n;
      ++q;
    }
    return p.ticks[static_cast<std::size_t>(s)] - drift * s + q * shift;
  };
  std::vector<std::int64_t> out;
  for (std::int64_t t = 0; t <= n; ++t) {
    std::int64_t low = g(t);
    for (std::int64_t s = t - 2 * n; s <= t; ++s) low = std::min(low, g(s));
    out.push_back(g(t) - low);
  }
  return out;
}

}  // namespace

TEST(Psi, ZeroAndExcursionFixedPoints) {
  const auto zero = from_ticks(std::vector<std::int64_t>(11, 0));
  EXPECT_EQ(psi(zero, 0.0), zero);
  const auto e = from_ticks({0, 2, 3, 1, 4, 0});
  EXPECT_EQ(psi_ticks(e, 0), e);
}

TEST(Psi, MatchesDefinitionOnRandomBridges) {
  Rng rng(5);
  for (int it = 0; it < 300; ++it) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng.uniform_below(40));
    std::vector<std::int64_t> v(static_cast<std::size_t>(n + 1), 0);
    for (std::int64_t j = 1; j <= n; ++j) v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j - 1)] + rng.uniform_int(-3, 2);
    const auto p = from_ticks(v);
    const auto rise = v.back() - v.front();
    const std::int64_t need = rise > 0 ? (rise + n - 1) / n : 0;
    for (std::int64_t drift : {need, need + 1, need + 4}) {
      ASSERT_EQ(psi_ticks(p, drift).ticks, psi_brute(p, drift));
    }
  }
  EXPECT_THROW(psi_ticks(from_ticks({0, 5, 5}), 0), std::invalid_argument);
  EXPECT_THROW(psi(LatticePath(2, {0, 1, 0}, 1.0, false), 0.0), std::invalid_argument);
}

TEST(Psi, SemigroupAndRefinementOnExcursions) {
  Rng rng(9);
  for (int it = 0; it < 50; ++it) {
    const auto e = sample_excursion(2000, rng);
    const auto a = static_cast<std::int64_t>(rng.uniform_below(20000));
    const auto b = static_cast<std::int64_t>(rng.uniform_below(20000));
    const auto once = psi_ticks(e, a);
    const auto twice = psi_ticks(once, b);
    ASSERT_EQ(twice, psi_ticks(e, a + b));
    for (std::size_t j = 0; j < once.ticks.size(); ++j) {
      if (once.ticks[j] == 0) ASSERT_EQ(twice.ticks[j], 0);
    }
  }
}

TEST(Psi, CountPathGivesProfile) {
  // On C_k, Psi_0 vanishes at strict records and is H - 1 elsewhere.
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const Place m = 10000;
    const auto l = 1 + static_cast<std::int64_t>(rng.uniform_below(200));
    const auto s = simulate_uniform(m, m - l, rng);
    const auto cc = centered_counts(s);
    const auto img = psi_ticks(lattice_from_counts(cc), 0);
    const auto h = profile(s);
    for (Place k = 1; k <= m; ++k) {
      const auto value = img.ticks[static_cast<std::size_t>(k)];
      if (s.occupied(k)) {
        ASSERT_EQ(h.at(k), value + 1);
      } else {
        ASSERT_EQ(value, 0);
      }
    }
  }
}

TEST(Excursion, ShapeAndMaxMoment) {
  const auto e = sample_excursion(500, 3);
  EXPECT_EQ(e.ticks.front(), 0);
  EXPECT_EQ(e.ticks.back(), 0);
  for (std::size_t j = 1; j + 1 < e.ticks.size(); ++j) EXPECT_GT(e.ticks[j], 0);
  EXPECT_EQ(sample_excursion(500, 3), e);
  EXPECT_THROW(sample_excursion(1, 3), std::invalid_argument);

  std::vector<double> maxima, fine;
  Rng rng(14);
  for (int r = 0; r < 2000; ++r) maxima.push_back(sample_excursion(10000, rng).max_value());
  for (int r = 0; r < 1000; ++r) fine.push_back(sample_excursion(20000, rng).max_value());
  EXPECT_NEAR(mean(maxima), std::sqrt(std::numbers::pi / 2), 0.03);
  EXPECT_NEAR(mean(fine), std::sqrt(std::numbers::pi / 2), 0.03);
}

TEST(Widths, LambdaZeroAndPartition) {
  Rng rng(2);
  const auto e = sample_excursion(1000, rng);
  const auto zero = excursion_widths(e, 0.0);
  ASSERT_EQ(zero.widths.size(), 1u);
  EXPECT_DOUBLE_EQ(zero.widths[0], 1.0);
  for (double lambda : {0.5, 1.0, 3.0}) {
    const auto img = psi(e, lambda);
    const auto set = excursion_widths(e, lambda);
    std::int64_t zeros = 0;
    for (std::int64_t j = 0; j < img.n; ++j) zeros += img.ticks[static_cast<std::size_t>(j)] == 0;
    std::int64_t unit_gaps = 0;
    for (const auto& g : zero_gaps(img)) unit_gaps += g.length() == 1;
    double total = 0.0;
    for (double w : set.widths) total += w;
    EXPECT_NEAR(total, 1.0 - static_cast<double>(unit_gaps) / 1000.0, 1e-12);
    EXPECT_LE(unit_gaps, zeros);
    EXPECT_TRUE(std::is_sorted(set.widths.rbegin(), set.widths.rend()));
    for (const auto& g : set.intervals) {
      for (auto j = g.a + 1; j < g.b; ++j) EXPECT_GT(img.ticks[static_cast<std::size_t>(j % 1000)], 0);
    }
  }
}

TEST(SampleR1, ConventionsAndMonotonicity) {
  Rng rng(6);
  const auto e = sample_excursion(1000, rng);
  EXPECT_DOUBLE_EQ(sample_R1(e, 0.0, 0.37).width, 1.0);
  EXPECT_THROW(sample_R1(e, 1.0, 1.0), std::invalid_argument);
  for (int r = 0; r < 50; ++r) {
    const double rho = rng.uniform01();
    double prev = 1.0;
    for (double lambda : {0.0, 0.3, 0.7, 1.0, 2.0, 4.0}) {
      const auto b = sample_R1(e, lambda, rho);
      EXPECT_LE(b.width, prev);
      EXPECT_LE(b.g, rho);
      EXPECT_GT(b.d, rho);
      prev = b.width;
    }
  }
  // A zero belongs to the gap on its right.
  const auto p = from_ticks({0, 3, 0, 2, 2, 0});
  const auto b = sample_R1(p, 0.0, 0.4);
  EXPECT_EQ(b.interval, (GridInterval{2, 5}));
}

TEST(Subordinator, MonotoneAndZeroAtStart) {
  Rng rng(7);
  const auto e = sample_excursion(1000, rng);
  const std::vector<double> grid{0.0, 0.5, 1.0, 2.0};
  const auto s = subordinator_path(e, 0.61, grid);
  EXPECT_DOUBLE_EQ(s.sigma[0], 0.0);
  EXPECT_TRUE(std::is_sorted(s.sigma.begin(), s.sigma.end()));
  EXPECT_THROW(subordinator_path(e, 0.5, std::vector<double>{1.0, 1.0}), std::invalid_argument);
}

TEST(Decompose, PiecesAreExcursions) {
  Rng rng(8);
  for (int r = 0; r < 30; ++r) {
    const auto e = sample_excursion(2000, rng);
    const auto d = decompose(e, 1.0, rng.uniform01(), rng.uniform01());
    EXPECT_EQ(d.q.ticks.front(), 0);
    EXPECT_EQ(d.q.ticks.back(), 0);
    EXPECT_EQ(d.q.n + d.r_shifted.n, 2000);
    EXPECT_NEAR(d.r1, static_cast<double>(d.q.n) / 2000.0, 1e-15);
    EXPECT_GE(*std::min_element(d.r_shifted.ticks.begin(), d.r_shifted.ticks.end()), 0);
    EXPECT_NEAR(d.q.tick, e.tick / std::sqrt(d.r1), 1e-18);
  }
  EXPECT_THROW(decompose(sample_excursion(100, 1), 0.0, 0.5, 0.5), std::domain_error);
}

TEST(Scaling, RestrictionCommutesWithPsi) {
  // For a square-ratio sub-excursion, the drift in ticks is unchanged by rescaling.
  Rng rng(10);
  for (int r = 0; r < 20; ++r) {
    const auto e = sample_excursion(4000, rng);
    const auto img = psi(e, 1.0);
    const auto gaps = zero_gaps(img);
    const auto widest = *std::max_element(gaps.begin(), gaps.end(),
                                          [](const auto& a, const auto& b) { return a.length() < b.length(); });
    const auto piece = restrict_rescaled(img, widest.a, widest.b);
    const double x = static_cast<double>(widest.length()) / 4000.0;
    const double mu = 0.5;
    const auto direct = psi_ticks(piece, drift_ticks(piece, mu * std::sqrt(x)));
    const auto via = restrict_rescaled(psi_ticks(img, drift_ticks(img, mu)), widest.a, widest.b);
    EXPECT_EQ(drift_ticks(piece, mu * std::sqrt(x)), drift_ticks(img, mu));
    EXPECT_EQ(direct.ticks, via.ticks);
  }
}

TEST(SizeBiased, MonotoneBoundedAndErrors) {
  Rng rng(11);
  const auto e = sample_excursion(1000, rng);
  std::vector<double> rho(400);
  for (auto& u : rho) u = rng.uniform01();
  const auto s = size_biased_sums(e, 2.0, rho, 3);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  EXPECT_LE(s.back(), 1.0);
  EXPECT_THROW(size_biased_sums(e, 0.0, rho, 2), std::runtime_error);
  EXPECT_THROW(size_biased_sums(e, 2.0, std::vector<double>{0.5, 0.5}, 2), std::runtime_error);
}
