#include <gtest/gtest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "parkphase/rng.hpp"
#include "parkphase/stats.hpp"

using namespace parkphase;

TEST(Ks, TrivialCases) {
  const std::vector<double> one{0.0};
  EXPECT_DOUBLE_EQ(ks_distance(one, normal_cdf), 0.5);
  EXPECT_DOUBLE_EQ(ks_distance(std::vector<double>{0.2, 0.7}, [](double) { return 0.0; }), 1.0);
  EXPECT_THROW(ks_distance(std::vector<double>{}, normal_cdf), std::invalid_argument);
}

TEST(Ks, SelfTestOnReferenceSamples) {
  int passes = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    std::vector<double> xs(10000);
    for (auto& x : xs) x = rng.normal();
    passes += ks_distance(xs, normal_cdf) <= 0.025;
  }
  EXPECT_GE(passes, 99);
}

TEST(Ks, TwoSample) {
  Rng rng(1);
  std::vector<double> a(5000), b(5000), c(5000);
  for (auto& x : a) x = rng.uniform01();
  for (auto& x : b) x = rng.uniform01();
  for (auto& x : c) x = rng.uniform01() * 0.8;
  EXPECT_LE(ks_two_sample(a, b), 0.03);
  EXPECT_NEAR(ks_two_sample(a, c), 0.2, 0.03);
  EXPECT_DOUBLE_EQ(ks_two_sample(std::vector<double>{1.0}, std::vector<double>{2.0}), 1.0);
}

TEST(ChiSquare, FairDieAndLoadedDie) {
  Rng rng(3);
  std::vector<std::int64_t> fair(6, 0), loaded(6, 0);
  for (int i = 0; i < 60000; ++i) ++fair[rng.uniform_below(6)];
  for (int i = 0; i < 60000; ++i) ++loaded[std::min<std::uint64_t>(rng.uniform_below(7), 5)];
  const std::vector<double> p(6, 1.0 / 6.0);
  const auto f = chi_square(fair, p);
  EXPECT_EQ(f.dof, 5);
  EXPECT_GT(f.p_value, 1e-3);
  EXPECT_LT(chi_square(loaded, p).p_value, 1e-6);
  // Sparse tail cells pool together.
  const auto pooled = chi_square(std::vector<std::int64_t>{50, 48, 1, 1}, std::vector<double>{0.5, 0.48, 0.01, 0.01});
  EXPECT_EQ(pooled.dof, 1);
}

TEST(Summaries, MeanCorrelationMedian) {
  EXPECT_DOUBLE_EQ(mean(std::vector<double>{1, 2, 3}), 2.0);
  EXPECT_DOUBLE_EQ(median({3, 1, 2}), 2.0);
  EXPECT_DOUBLE_EQ(median({4, 1, 3, 2}), 2.5);
  EXPECT_NEAR(correlation(std::vector<double>{1, 2, 3}, std::vector<double>{2, 4, 6}), 1.0, 1e-12);
  EXPECT_NEAR(correlation(std::vector<double>{1, 2, 3}, std::vector<double>{3, 2, 1}), -1.0, 1e-12);
}

TEST(Report, PassFlagAndJson) {
  const auto r = GofReport::make("ks_r1", "KS", 5000, 0.01, 0.03, 7, config_hash("a=1"));
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(GofReport::make("x", "KS", 1, 0.04, 0.03, 7, "").pass);
  const nlohmann::json j = r;
  EXPECT_EQ(j["config_hash"], config_hash("a=1"));
  EXPECT_EQ(config_hash("a=1").size(), 16u);
  EXPECT_NE(config_hash("a=1"), config_hash("a=2"));
  EXPECT_EQ(config_hash(""), "cbf29ce484222325");
}
